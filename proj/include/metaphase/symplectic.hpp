// Linear-symplectic algebra: form checks, block inverse, Cayley transforms,
// generating functions, Williamson normal form.

#pragma once

#include "metaphase/errors.hpp"
#include "metaphase/types.hpp"

namespace metaphase {

inline constexpr double kSymplecticTol = 1e-10;
inline constexpr double kDegeneracyTol = 1e-9;

// Standard form J = [[0, I], [-I, 0]] for n modes.
Mat standard_form(int modes);

// sigma(z, z') = J z . z' = p . x' - p' . x
double symplectic_form(const Vec& z, const Vec& zp);

bool is_symplectic(const Mat& s, double tol = kSymplecticTol);

// ||S^T J S - J||_max
double symplectic_defect(const Mat& s);

// Real 2n x 2n matrix validated against S^T J S = J on construction.
class SympMatrix {
  public:
    explicit SympMatrix(Mat entries, double tol = kSymplecticTol);

    const Mat& mat() const { return m_; }
    int modes() const { return n_; }
    int dim() const { return 2 * n_; }

    Mat block_a() const { return m_.topLeftCorner(n_, n_); }
    Mat block_b() const { return m_.topRightCorner(n_, n_); }
    Mat block_c() const { return m_.bottomLeftCorner(n_, n_); }
    Mat block_d() const { return m_.bottomRightCorner(n_, n_); }

    // Skips the symplecticity check; for internal products of checked inputs.
    static SympMatrix trusted(Mat entries);

  private:
    SympMatrix() = default;
    Mat m_;
    int n_ = 0;
};

// Exact block inverse [[D^T, -B^T], [-C^T, A^T]].
SympMatrix symplectic_inverse(const SympMatrix& s);

double det_s_minus_i(const Mat& s);

// |det(S - I)| below tol, scaled by the matrix magnitude.
bool is_degenerate(const Mat& s, double tol = kDegeneracyTol);

// Signature (#positive - #negative eigenvalues) of a symmetric matrix.
// Eigenvalues within tol of zero raise UnresolvedCrossing.
int signature(const Mat& symmetric, double tol = 1e-10);

// Symplectic Cayley transform M(S) = 1/2 J (S + I)(S - I)^{-1}, symmetric.
Mat cayley(const SympMatrix& s, double tol = kDegeneracyTol);

// M(S) + M(S'); requires S, S', SS' all non-degenerate (else the sum
// need not be invertible and the product formulas break down).
Mat cayley_sum(const SympMatrix& s, const SympMatrix& sp, double tol = kDegeneracyTol);

// Quadratic form W(x, x') = 1/2 P x.x - L x.x' + 1/2 Q x'.x' together with
// the Maslov integer m (a choice of arg det L / pi, mod 4).
struct GeneratingFunction {
    Mat p;
    Mat q;
    Mat l;
    int maslov = 0;

    int modes() const { return static_cast<int>(l.rows()); }
};

// Hessian of x -> W(x, x): P - L - L^T + Q.
Mat wxx(const GeneratingFunction& w);

// S_W = [[L^{-1}Q, L^{-1}], [P L^{-1} Q - L^T, P L^{-1}]]
SympMatrix matrix_from_generating_function(const GeneratingFunction& w);

// Inverse of the above for free S (det B != 0): L = B^{-1}, Q = B^{-1}A,
// P = D B^{-1}. m_choice must have the parity of arg det L / pi.
GeneratingFunction generating_function_from_matrix(const SympMatrix& s, int m_choice);

struct WilliamsonForm {
    SympMatrix r;  // K = R^T D R with D = diag(omegas, omegas)
    Vec omegas;    // symplectic eigenvalues, ascending
};

// Symplectic diagonalization of an SPD matrix K via K^{1/2} J K^{1/2}.
WilliamsonForm williamson(const Mat& k);

Vec symplectic_eigenvalues(const Mat& k);

}  // namespace metaphase
