#pragma once

#include "zxec/Circuit.hpp"
#include "zxec/Diagram.hpp"

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace zx {

using Complex = std::complex<double>;

class OracleError : public std::runtime_error {
public:
    explicit OracleError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Dense complex matrix with power-of-two dimensions, row-major. Rows index
/// output basis states, columns input basis states; qubit 0 is the most
/// significant bit of an index.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t dim);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    Complex&       operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    [[nodiscard]] Matrix  operator*(const Matrix& rhs) const;
    [[nodiscard]] Matrix  kron(const Matrix& rhs) const;
    [[nodiscard]] Matrix  dagger() const;
    [[nodiscard]] Complex trace() const;
    [[nodiscard]] double  maxAbs() const;

    /// Aligned complex grid, for debugging.
    [[nodiscard]] std::string toString() const;

    [[nodiscard]] const std::vector<Complex>& raw() const noexcept { return a_; }
    std::vector<Complex>&                     raw() noexcept { return a_; }

private:
    std::size_t          rows_ = 0;
    std::size_t          cols_ = 0;
    std::vector<Complex> a_;
};

/// Contracts the diagram's tensor network into its linear map (scalar-exact;
/// greedy pairwise contraction, smallest resulting rank first). Throws when
/// an intermediate tensor would exceed the memory budget.
[[nodiscard]] Matrix interpretDiagram(const Diagram& d);

/// The unitary realized by the gate list with the initial layout encoded as
/// a wire permutation. The output permutation is NOT applied; callers that
/// compare compiled artifacts compose it themselves.
[[nodiscard]] Matrix circuitUnitary(const Circuit& c);

/// Permutation matrix for a physical->logical wire map: column = logical
/// basis state, row = physical wire assignment with wire p holding logical
/// qubit perm[p].
[[nodiscard]] Matrix layoutMatrix(const std::vector<std::size_t>& perm);

/// Fixes `qubit` to |0> or |1> at input and output per the state-and-effect
/// construction. If the result's columns are not unit norm within 1e-9, an
/// isometry-defect warning is printed to stderr; the defect magnitude is
/// reported through `defect` when non-null.
[[nodiscard]] Matrix fixAncilla(const Matrix& u, std::size_t qubit, bool one,
                                double* defect = nullptr);

struct HsResult {
    bool   equalUpToPhase;
    double fidelity;
};

/// Hilbert-Schmidt check: fidelity = |tr(u^dag v)| / 2^n, equal iff
/// fidelity >= 1 - tau.
[[nodiscard]] HsResult hsCheck(const Matrix& u, const Matrix& v, double tau);

/// Whether a = c*b for some nonzero complex scalar c, within tol after
/// normalizing by the largest-magnitude entry.
[[nodiscard]] bool proportional(const Matrix& a, const Matrix& b, double tol = 1e-9);

} // namespace zx
