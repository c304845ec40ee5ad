#ifndef FLAGMOD_EXACTLINALG_HPP
#define FLAGMOD_EXACTLINALG_HPP

// Exact scalar fields (Q and GF(p^e)) and the dense linear algebra kernel:
// reduced row echelon form, rank, nullspace, subspace sum/intersection, and
// spin-up closure under a set of linear operators.
//
// Scalars are runtime-tagged: a field descriptor carries the arithmetic and
// every vector/matrix stores the descriptor it was built over. Rationals are
// GMP mpq_class; finite field elements are residues packed into an int64
// (base-p digit encoding of the polynomial representative for e > 1).

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace flagmod {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Either a finite field residue or a rational. Default-constructed scalars
// are the integer 0 and are accepted by every field.
using Scalar = std::variant<std::int64_t, mpq_class>;

// Immutable field descriptor. All arithmetic goes through the descriptor so
// that one matrix kernel serves Q and every GF(p^e) alike.
class Field {
public:
    static FieldPtr rationals();
    // GF(p^e). For e > 1 the modulus is a fixed irreducible polynomial from
    // the table below (gf_modulus_table); unlisted (p, e) pairs are rejected.
    static FieldPtr finite(std::int64_t p, int e = 1);

    bool is_rational() const { return p_ == 0; }
    std::int64_t characteristic() const { return p_; }
    int degree() const { return e_; }
    std::int64_t size() const { return q_; }  // 0 for Q

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t n) const;
    Scalar from_ratio(std::int64_t num, std::int64_t den) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar div(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;

    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    bool eq(const Scalar& a, const Scalar& b) const;

    std::string to_string(const Scalar& a) const;
    // Accepts "n", "-n", "a/b" for Q; a plain residue for finite fields.
    Scalar parse(const std::string& text) const;

    // Generator of the multiplicative group (finite fields only).
    Scalar primitive_element() const;

    // Largest numerator/denominator bit size seen across the given scalars;
    // 0 for finite fields. Diagnostic for Q coefficient growth.
    static std::size_t max_bits(const std::vector<Scalar>& v);

    bool same(const Field& other) const { return p_ == other.p_ && e_ == other.e_; }

    std::string name() const;  // "Q", "GF(5)", "GF(9)"

private:
    Field(std::int64_t p, int e);
    std::int64_t fin(const Scalar& a) const;   // residue in [0, q), coercing int64
    const mpq_class& rat(const Scalar& a, mpq_class& tmp) const;
    std::int64_t fmul(std::int64_t a, std::int64_t b) const;
    std::int64_t fadd(std::int64_t a, std::int64_t b) const;
    std::int64_t fneg(std::int64_t a) const;
    std::int64_t finv(std::int64_t a) const;

    std::int64_t p_ = 0;  // 0 => Q
    int e_ = 1;
    std::int64_t q_ = 0;
    std::vector<std::int64_t> mul_table_;  // q*q, extension fields only
    std::vector<std::int64_t> inv_table_;  // q, extension fields only
};

// Fixed irreducible moduli for the supported extension fields, coefficients
// listed constant-first. These are the defining constants of the GF(p^e)
// element encoding and are part of the library interface.
struct GfModulus {
    std::int64_t p;
    int e;
    std::vector<std::int64_t> coeffs;  // degree e monic polynomial over GF(p)
};
const std::vector<GfModulus>& gf_modulus_table();

using Vec = std::vector<Scalar>;

class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr f, int rows, int cols);
    static Matrix identity(FieldPtr f, int n);
    static Matrix from_rows(FieldPtr f, const std::vector<Vec>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return f_; }

    Scalar& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    Vec row(int r) const;
    void set_row(int r, const Vec& v);

    Matrix mul(const Matrix& other) const;
    Vec apply(const Vec& v) const;  // matrix * column vector
    Matrix transpose() const;
    Matrix sub(const Matrix& other) const;
    bool equals(const Matrix& other) const;
    bool is_identity() const;
    bool is_zero() const;

    Scalar det() const;  // Gaussian elimination, exact

    // Plain row-major text, first line "rows cols", entries space-separated.
    std::string serialize() const;
    static Matrix deserialize(FieldPtr f, const std::string& text);

private:
    FieldPtr f_;
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

// Reduced row-echelon basis of a subspace. Rows have leading 1 in strictly
// increasing pivot columns and pivot columns are cleared; the form is the
// canonical representative of its row space.
class SubspaceBasis {
public:
    explicit SubspaceBasis(FieldPtr f, int ambient_dim);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const FieldPtr& field() const { return f_; }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Residue of v after eliminating against the basis.
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const;
    bool contains(const SubspaceBasis& other) const;
    bool equals(const SubspaceBasis& other) const;

    // Insert v, keeping the basis in RREF. Returns true if the dimension grew.
    bool insert(const Vec& v);

    Matrix to_matrix() const;

private:
    FieldPtr f_;
    int ambient_;
    std::vector<Vec> rows_;
    std::vector<int> pivots_;
};

Vec zero_vec(const FieldPtr& f, int n);
Vec add_vec(const FieldPtr& f, const Vec& a, const Vec& b);
Vec scale_vec(const FieldPtr& f, const Scalar& c, const Vec& a);
bool is_zero_vec(const FieldPtr& f, const Vec& a);

SubspaceBasis rref(const Matrix& m);
int rank(const Matrix& m);
// Basis of { v : m * v = 0 }.
SubspaceBasis nullspace(const Matrix& m);

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b);
// Zassenhaus: echelonize [A|A; B|0], read the intersection off the rows whose
// left half vanished.
SubspaceBasis subspace_intersect(const SubspaceBasis& a, const SubspaceBasis& b);

// A linear operator for spin-up: dense matrix or matrix-free action.
using LinearOp = std::function<Vec(const Vec&)>;

// Provenance of one vector admitted into a spin-up closure: which vector it
// was derived from (-1-based seed index or chain index) and by which operator
// (-1 for seeds).
struct SpinStep {
    int parent;  // index into chain, or -(k+1) for seed k
    int op;      // operator index, -1 for seeds
};

struct SpinResult {
    SubspaceBasis basis;
    std::vector<Vec> chain;       // the admitted spanning vectors, in order
    std::vector<SpinStep> steps;  // parallel to chain
};

// Smallest subspace containing the seeds and closed under all operators.
// Closure is re-verified on every chain vector before returning.
SpinResult spin(const FieldPtr& f, int ambient_dim, const std::vector<Vec>& seeds,
                const std::vector<LinearOp>& operators);

}  // namespace flagmod

#endif
