#pragma once

#include <string>
#include <vector>

namespace satake {

// Concrete arithmetic varieties: the quadric {Q = k} of signature (p, q),
// the determinant surface {det = k} in n x n matrices, and the unimodular
// symmetric matrices of signature (p, q).  Integer points are stored as flat
// coordinate vectors:
//   quadric     - (x_1..x_p, y_1..y_q), Q = sum x^2 - sum y^2
//   detsurface  - row-major n x n entries
//   symmat      - upper triangle row-major (a_11, a_12.., a_1n, a_22, ..)

enum class FamilyKind { Quadric, Detsurface, Symmat };
enum class NormKind { Euclidean, Sup };

struct PointFamily {
    FamilyKind kind = FamilyKind::Quadric;
    int p = 0, q = 0;  // signature (quadric, symmat)
    int n = 0;         // matrix size (detsurface, symmat)
    long long k = 1;   // level: Q = k, det = k; symmat fixes det = (-1)^q
    NormKind norm = NormKind::Euclidean;

    int ambient_dim() const;
    bool operator==(const PointFamily&) const = default;
};

// Validated constructors (throw ValidationError on bad parameters).
PointFamily make_quadric(int p, int q, long long k, NormKind norm = NormKind::Euclidean);
PointFamily make_detsurface(int n, long long k, NormKind norm = NormKind::Euclidean);
PointFamily make_symmat(int p, int q, NormKind norm = NormKind::Euclidean);

std::string family_label(const PointFamily& fam);

// Exact membership: the defining equation holds over the integers (and, for
// symmat, the signature matches).
bool on_family(const PointFamily& fam, const std::vector<long long>& x);

// Squared family norm as an exact integer.  Euclidean means the ambient
// Euclidean norm of the coordinate vector, except symmat where it is the
// Frobenius norm of the symmetric matrix (off-diagonal entries count twice).
// Sup ignores multiplicity: max |entry|, squared.
long long norm2_int(const PointFamily& fam, const std::vector<long long>& x);

double norm_of(const PointFamily& fam, const std::vector<long long>& x);

} // namespace satake
