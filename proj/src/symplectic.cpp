#include "metaphase/symplectic.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace metaphase {

Mat standard_form(int modes) {
    if (modes < 1) throw std::invalid_argument("standard_form: mode count must be >= 1");
    Mat j = Mat::Zero(2 * modes, 2 * modes);
    j.topRightCorner(modes, modes) = Mat::Identity(modes, modes);
    j.bottomLeftCorner(modes, modes) = -Mat::Identity(modes, modes);
    return j;
}

double symplectic_form(const Vec& z, const Vec& zp) {
    if (z.size() != zp.size() || z.size() % 2 != 0)
        throw std::invalid_argument("symplectic_form: vectors must share an even dimension");
    const auto n = z.size() / 2;
    return z.tail(n).dot(zp.head(n)) - zp.tail(n).dot(z.head(n));
}

double symplectic_defect(const Mat& s) {
    if (s.rows() != s.cols() || s.rows() % 2 != 0 || s.rows() == 0)
        throw std::invalid_argument("symplectic_defect: matrix must be square with even dimension");
    const int n = static_cast<int>(s.rows()) / 2;
    const Mat j = standard_form(n);
    return max_abs(s.transpose() * j * s - j);
}

bool is_symplectic(const Mat& s, double tol) { return symplectic_defect(s) <= tol; }

SympMatrix::SympMatrix(Mat entries, double tol) {
    const double defect = symplectic_defect(entries);
    if (defect > tol)
        throw std::invalid_argument("SympMatrix: S^T J S - J defect " + std::to_string(defect) +
                                    " exceeds tolerance " + std::to_string(tol));
    n_ = static_cast<int>(entries.rows()) / 2;
    m_ = std::move(entries);
}

SympMatrix SympMatrix::trusted(Mat entries) {
    SympMatrix s;
    s.n_ = static_cast<int>(entries.rows()) / 2;
    s.m_ = std::move(entries);
    return s;
}

SympMatrix symplectic_inverse(const SympMatrix& s) {
    const int n = s.modes();
    Mat inv(2 * n, 2 * n);
    inv.topLeftCorner(n, n) = s.block_d().transpose();
    inv.topRightCorner(n, n) = -s.block_b().transpose();
    inv.bottomLeftCorner(n, n) = -s.block_c().transpose();
    inv.bottomRightCorner(n, n) = s.block_a().transpose();
    return SympMatrix::trusted(std::move(inv));
}

double det_s_minus_i(const Mat& s) {
    return (s - Mat::Identity(s.rows(), s.cols())).determinant();
}

bool is_degenerate(const Mat& s, double tol) {
    const double scale = std::max(1.0, max_abs(s));
    const double bound = tol * std::pow(scale, static_cast<double>(s.rows()));
    return std::abs(det_s_minus_i(s)) < bound;
}

int signature(const Mat& symmetric, double tol) {
    Eigen::SelfAdjointEigenSolver<Mat> es(symmetric, Eigen::EigenvaluesOnly);
    const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    int pos = 0, neg = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double ev = es.eigenvalues()(i);
        if (ev > tol * scale)
            ++pos;
        else if (ev < -tol * scale)
            ++neg;
        else
            throw UnresolvedCrossing("signature: eigenvalue within tolerance of zero");
    }
    return pos - neg;
}

Mat cayley(const SympMatrix& s, double tol) {
    if (is_degenerate(s.mat(), tol))
        throw DegenerateEndpoint("cayley: det(S - I) vanishes, S lies on the degenerate set");
    const int d = s.dim();
    const Mat j = standard_form(s.modes());
    const Mat smi = s.mat() - Mat::Identity(d, d);
    const Mat m = 0.5 * j * (s.mat() + Mat::Identity(d, d)) * smi.partialPivLu().inverse();
    return symmetrized(m);
}

Mat cayley_sum(const SympMatrix& s, const SympMatrix& sp, double tol) {
    if (s.dim() != sp.dim()) throw std::invalid_argument("cayley_sum: dimension mismatch");
    const Mat prod = s.mat() * sp.mat();
    if (is_degenerate(prod, tol))
        throw DegenerateProduct("cayley_sum: det(S S' - I) vanishes; M(S) + M(S') may be singular");
    return cayley(s, tol) + cayley(sp, tol);
}

Mat wxx(const GeneratingFunction& w) { return w.p - w.l - w.l.transpose() + w.q; }

SympMatrix matrix_from_generating_function(const GeneratingFunction& w) {
    const int n = w.modes();
    if (w.p.rows() != n || w.q.rows() != n || w.p.cols() != n || w.q.cols() != n)
        throw std::invalid_argument("matrix_from_generating_function: block size mismatch");
    Eigen::PartialPivLU<Mat> lu(w.l);
    const double dl = lu.determinant();
    if (std::abs(dl) < 1e-12)
        throw std::invalid_argument("matrix_from_generating_function: singular L");
    const Mat linv = lu.inverse();
    Mat s(2 * n, 2 * n);
    s.topLeftCorner(n, n) = linv * w.q;
    s.topRightCorner(n, n) = linv;
    s.bottomLeftCorner(n, n) = w.p * linv * w.q - w.l.transpose();
    s.bottomRightCorner(n, n) = w.p * linv;
    return SympMatrix(std::move(s));
}

GeneratingFunction generating_function_from_matrix(const SympMatrix& s, int m_choice) {
    const int n = s.modes();
    const Mat b = s.block_b();
    Eigen::PartialPivLU<Mat> lu(b);
    const double db = lu.determinant();
    const double scale = std::max(1.0, max_abs(s.mat()));
    if (std::abs(db) < kDegeneracyTol * std::pow(scale, n))
        throw NotFree("generating_function_from_matrix: B-block singular, S is not free");
    GeneratingFunction w;
    w.l = lu.inverse();
    w.q = symmetrized(w.l * s.block_a());
    w.p = symmetrized(s.block_d() * w.l);
    const double det_l = 1.0 / db;
    if ((det_l > 0) != (mod2(m_choice) == 0))
        throw std::invalid_argument(
            "generating_function_from_matrix: Maslov choice parity inconsistent with sign det L");
    w.maslov = m_choice;
    return w;
}

namespace {

// SPD square root via eigendecomposition.
Mat spd_sqrt(const Mat& k) {
    Eigen::SelfAdjointEigenSolver<Mat> es(k);
    if (es.eigenvalues().minCoeff() <= 0)
        throw std::invalid_argument("williamson: matrix is not positive definite");
    return es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() *
           es.eigenvectors().transpose();
}

}  // namespace

WilliamsonForm williamson(const Mat& k) {
    if (k.rows() != k.cols() || k.rows() % 2 != 0 || k.rows() == 0)
        throw std::invalid_argument("williamson: matrix must be square with even dimension");
    if (max_abs(k - k.transpose()) > 1e-10 * std::max(1.0, max_abs(k)))
        throw std::invalid_argument("williamson: matrix must be symmetric");
    const int n = static_cast<int>(k.rows()) / 2;
    const Mat ksqrt = spd_sqrt(symmetrized(k));
    const Mat j = standard_form(n);
    const Mat a = ksqrt * j * ksqrt;  // antisymmetric, eigenvalues +- i omega_j
    const CMat h = cplx(0.0, 1.0) * a.cast<cplx>();
    Eigen::SelfAdjointEigenSolver<CMat> es(h);

    // Positive eigenvalues ascending; u = a + ib with A a = omega b, A b = -omega a.
    // Orthogonality of {sqrt2 a_j, sqrt2 b_j} holds automatically, including inside
    // degenerate omega groups, because conj(u) lives in the -omega eigenspace.
    std::vector<int> idx;
    for (int i = 0; i < 2 * n; ++i)
        if (es.eigenvalues()(i) > 0) idx.push_back(i);
    if (static_cast<int>(idx.size()) != n)
        throw std::invalid_argument("williamson: could not pair eigenvalues (matrix near-singular?)");

    Vec omegas(n);
    Mat o(2 * n, 2 * n);
    for (int j_idx = 0; j_idx < n; ++j_idx) {
        omegas(j_idx) = es.eigenvalues()(idx[j_idx]);
        CVec u = es.eigenvectors().col(idx[j_idx]);
        // Deterministic phase gauge: largest-magnitude entry made real positive.
        Eigen::Index imax;
        u.cwiseAbs().maxCoeff(&imax);
        u *= std::polar(1.0, -std::arg(u(imax)));
        o.col(j_idx) = std::sqrt(2.0) * u.imag();
        o.col(n + j_idx) = std::sqrt(2.0) * u.real();
    }

    Vec dinv_sqrt(2 * n);
    dinv_sqrt << omegas.cwiseSqrt().cwiseInverse(), omegas.cwiseSqrt().cwiseInverse();
    Mat r = dinv_sqrt.asDiagonal() * o.transpose() * ksqrt;
    return WilliamsonForm{SympMatrix(std::move(r)), std::move(omegas)};
}

Vec symplectic_eigenvalues(const Mat& k) { return williamson(k).omegas; }

}  // namespace metaphase
