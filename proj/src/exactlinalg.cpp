#include "exactlinalg.hpp"

#include <algorithm>
#include <sstream>

namespace flagmod {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

// Multiply two GF(p)[x] polynomials packed as base-p integers and reduce by
// the monic modulus. Degrees stay < 2e, coefficients < p <= 101: no overflow.
std::int64_t poly_mulmod(std::int64_t a, std::int64_t b, std::int64_t p,
                         const std::vector<std::int64_t>& modulus) {
    int e = static_cast<int>(modulus.size()) - 1;
    std::vector<std::int64_t> da(e, 0), db(e, 0), prod(2 * e - 1, 0);
    for (int i = 0; i < e; ++i, a /= p) da[i] = a % p;
    for (int i = 0; i < e; ++i, b /= p) db[i] = b % p;
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    for (int d = 2 * e - 2; d >= e; --d) {
        std::int64_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int k = 0; k < e; ++k) {
            // x^d = x^(d-e) * (x^e) and x^e = -modulus[0..e-1]
            prod[d - e + k] = ((prod[d - e + k] - c * modulus[k]) % p + p) % p;
        }
    }
    std::int64_t out = 0;
    for (int i = e - 1; i >= 0; --i) out = out * p + prod[i];
    return out;
}

}  // namespace

const std::vector<GfModulus>& gf_modulus_table() {
    static const std::vector<GfModulus> table = {
        {2, 2, {1, 1, 1}},        // x^2 + x + 1
        {2, 3, {1, 1, 0, 1}},     // x^3 + x + 1
        {2, 4, {1, 1, 0, 0, 1}},  // x^4 + x + 1
        {3, 2, {1, 0, 1}},        // x^2 + 1
        {3, 3, {1, 2, 0, 1}},     // x^3 + 2x + 1
        {5, 2, {2, 0, 1}},        // x^2 + 2
        {7, 2, {1, 0, 1}},        // x^2 + 1
    };
    return table;
}

Field::Field(std::int64_t p, int e) : p_(p), e_(e) {
    if (p == 0) {
        q_ = 0;
        return;
    }
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (e < 1) throw std::invalid_argument("field degree must be positive");
    q_ = 1;
    for (int i = 0; i < e; ++i) {
        q_ *= p;
        if (q_ > 4096) throw std::invalid_argument("finite field too large");
    }
    if (e > 1) {
        const GfModulus* mod = nullptr;
        for (const auto& m : gf_modulus_table())
            if (m.p == p && m.e == e) mod = &m;
        if (!mod)
            throw std::invalid_argument("no modulus registered for GF(" + std::to_string(p) +
                                        "^" + std::to_string(e) + ")");
        mul_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
        inv_table_.assign(q_, 0);
        for (std::int64_t a = 0; a < q_; ++a)
            for (std::int64_t b = a; b < q_; ++b) {
                std::int64_t r = poly_mulmod(a, b, p, mod->coeffs);
                mul_table_[a * q_ + b] = r;
                mul_table_[b * q_ + a] = r;
            }
        for (std::int64_t a = 1; a < q_; ++a)
            for (std::int64_t b = 1; b < q_; ++b)
                if (mul_table_[a * q_ + b] == 1) {
                    inv_table_[a] = b;
                    break;
                }
        for (std::int64_t a = 1; a < q_; ++a)
            if (inv_table_[a] == 0) throw std::logic_error("modulus is not irreducible");
    }
}

FieldPtr Field::rationals() {
    static FieldPtr q(new Field(0, 1));
    return q;
}

FieldPtr Field::finite(std::int64_t p, int e) {
    return FieldPtr(new Field(p, e));
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const {
    if (is_rational()) return Scalar(mpq_class(static_cast<long>(n)));
    if (e_ == 1) return Scalar(((n % p_) + p_) % p_);
    // Extension fields embed integers through the prime subfield.
    return Scalar(((n % p_) + p_) % p_);
}

Scalar Field::from_ratio(std::int64_t num, std::int64_t den) const {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (is_rational()) {
        mpq_class r(static_cast<long>(num), static_cast<long>(den));
        r.canonicalize();
        return Scalar(r);
    }
    return div(from_int(num), from_int(den));
}

std::int64_t Field::fin(const Scalar& a) const {
    if (std::holds_alternative<std::int64_t>(a)) {
        std::int64_t v = std::get<std::int64_t>(a);
        if (v >= 0 && v < q_) return v;
        // Integer outside the residue range: embed through the prime field.
        return ((v % p_) + p_) % p_;
    }
    throw std::logic_error("rational scalar used in a finite field");
}

const mpq_class& Field::rat(const Scalar& a, mpq_class& tmp) const {
    if (std::holds_alternative<mpq_class>(a)) return std::get<mpq_class>(a);
    tmp = mpq_class(static_cast<long>(std::get<std::int64_t>(a)));
    return tmp;
}

std::int64_t Field::fadd(std::int64_t a, std::int64_t b) const {
    if (e_ == 1) return (a + b) % p_;
    // digitwise mod-p addition, no carries
    std::int64_t out = 0, mult = 1;
    for (int i = 0; i < e_; ++i) {
        out += ((a % p_ + b % p_) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

std::int64_t Field::fneg(std::int64_t a) const {
    if (e_ == 1) return (p_ - a) % p_;
    std::int64_t out = 0, mult = 1;
    for (int i = 0; i < e_; ++i) {
        out += ((p_ - a % p_) % p_) * mult;
        a /= p_;
        mult *= p_;
    }
    return out;
}

std::int64_t Field::fmul(std::int64_t a, std::int64_t b) const {
    if (e_ == 1) return a * b % p_;
    return mul_table_[a * q_ + b];
}

std::int64_t Field::finv(std::int64_t a) const {
    if (a == 0) throw std::domain_error("division by zero");
    if (e_ == 1) return mod_pow(a, p_ - 2, p_);
    return inv_table_[a];
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (is_rational()) {
        mpq_class t1, t2;
        mpq_class r = rat(a, t1) + rat(b, t2);
        return Scalar(r);
    }
    return Scalar(fadd(fin(a), fin(b)));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (is_rational()) {
        mpq_class t1, t2;
        mpq_class r = rat(a, t1) * rat(b, t2);
        return Scalar(r);
    }
    return Scalar(fmul(fin(a), fin(b)));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::neg(const Scalar& a) const {
    if (is_rational()) {
        mpq_class t;
        mpq_class r = -rat(a, t);
        return Scalar(r);
    }
    return Scalar(fneg(fin(a)));
}

Scalar Field::inv(const Scalar& a) const {
    if (is_rational()) {
        mpq_class t;
        const mpq_class& v = rat(a, t);
        if (v == 0) throw std::domain_error("division by zero");
        mpq_class r = 1 / v;
        return Scalar(r);
    }
    return Scalar(finv(fin(a)));
}

bool Field::is_zero(const Scalar& a) const {
    if (std::holds_alternative<std::int64_t>(a))
        return is_rational() ? std::get<std::int64_t>(a) == 0 : fin(a) == 0;
    return std::get<mpq_class>(a) == 0;
}

bool Field::is_one(const Scalar& a) const { return eq(a, one()); }

bool Field::eq(const Scalar& a, const Scalar& b) const {
    if (is_rational()) {
        mpq_class t1, t2;
        return rat(a, t1) == rat(b, t2);
    }
    return fin(a) == fin(b);
}

std::string Field::to_string(const Scalar& a) const {
    if (is_rational()) {
        mpq_class t;
        return rat(a, t).get_str();
    }
    return std::to_string(fin(a));
}

Scalar Field::parse(const std::string& text) const {
    if (text.empty()) throw std::invalid_argument("empty scalar");
    if (is_rational()) {
        mpq_class r(text);
        r.canonicalize();
        return Scalar(r);
    }
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::int64_t num = std::stoll(text.substr(0, slash));
        std::int64_t den = std::stoll(text.substr(slash + 1));
        return from_ratio(num, den);
    }
    return from_int(std::stoll(text));
}

Scalar Field::primitive_element() const {
    if (is_rational()) throw std::logic_error("primitive element of an infinite field");
    for (std::int64_t g = 1; g < q_; ++g) {
        std::int64_t x = g;
        int order = 1;
        while (x != 1) {
            x = fmul(x, g);
            ++order;
        }
        if (order == q_ - 1) return Scalar(g);
    }
    throw std::logic_error("no primitive element found");
}

std::size_t Field::max_bits(const std::vector<Scalar>& v) {
    std::size_t bits = 0;
    for (const auto& s : v)
        if (std::holds_alternative<mpq_class>(s)) {
            const mpq_class& r = std::get<mpq_class>(s);
            bits = std::max({bits, mpz_sizeinbase(r.get_num_mpz_t(), 2),
                             mpz_sizeinbase(r.get_den_mpz_t(), 2)});
        }
    return bits;
}

std::string Field::name() const {
    if (is_rational()) return "Q";
    return "GF(" + std::to_string(q_) + ")";
}

// ---------------------------------------------------------------------------

Matrix::Matrix(FieldPtr f, int rows, int cols)
    : f_(std::move(f)), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * cols, f_->zero()) {}

Matrix Matrix::identity(FieldPtr f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f->one();
    return m;
}

Matrix Matrix::from_rows(FieldPtr f, const std::vector<Vec>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ragged matrix");
    Matrix m(std::move(f), r, c);
    for (int i = 0; i < r; ++i) m.set_row(i, rows[i]);
    return m;
}

Vec Matrix::row(int r) const {
    return Vec(a_.begin() + static_cast<std::size_t>(r) * cols_,
               a_.begin() + static_cast<std::size_t>(r + 1) * cols_);
}

void Matrix::set_row(int r, const Vec& v) {
    std::copy(v.begin(), v.end(), a_.begin() + static_cast<std::size_t>(r) * cols_);
}

Matrix Matrix::mul(const Matrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch");
    Matrix out(f_, rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (f_->is_zero(aik)) continue;
            for (int j = 0; j < other.cols_; ++j)
                out.at(i, j) = f_->add(out.at(i, j), f_->mul(aik, other.at(k, j)));
        }
    return out;
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("dimension mismatch");
    Vec out(rows_, f_->zero());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (f_->is_zero(at(i, j))) continue;
            out[i] = f_->add(out[i], f_->mul(at(i, j), v[j]));
        }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Matrix Matrix::sub(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("dimension mismatch");
    Matrix out(f_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_->sub(a_[i], other.a_[i]);
    return out;
}

bool Matrix::equals(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!f_->eq(a_[i], other.a_[i])) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    return equals(identity(f_, rows_));
}

bool Matrix::is_zero() const {
    for (const auto& s : a_)
        if (!f_->is_zero(s)) return false;
    return true;
}

Scalar Matrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    Matrix m = *this;
    Scalar d = f_->one();
    int n = rows_;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!f_->is_zero(m.at(r, col))) {
                piv = r;
                break;
            }
        if (piv < 0) return f_->zero();
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = f_->neg(d);
        }
        d = f_->mul(d, m.at(col, col));
        Scalar pinv = f_->inv(m.at(col, col));
        for (int r = col + 1; r < n; ++r) {
            if (f_->is_zero(m.at(r, col))) continue;
            Scalar factor = f_->mul(m.at(r, col), pinv);
            for (int j = col; j < n; ++j)
                m.at(r, j) = f_->sub(m.at(r, j), f_->mul(factor, m.at(col, j)));
        }
    }
    return d;
}

std::string Matrix::serialize() const {
    std::ostringstream os;
    os << rows_ << " " << cols_ << "\n";
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << f_->to_string(at(i, j));
        os << "\n";
    }
    return os.str();
}

Matrix Matrix::deserialize(FieldPtr f, const std::string& text) {
    std::istringstream is(text);
    int r, c;
    if (!(is >> r >> c)) throw std::invalid_argument("bad matrix header");
    Matrix m(f, r, c);
    std::string tok;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            if (!(is >> tok)) throw std::invalid_argument("truncated matrix");
            m.at(i, j) = f->parse(tok);
        }
    return m;
}

// ---------------------------------------------------------------------------

Vec zero_vec(const FieldPtr& f, int n) { return Vec(n, f->zero()); }

Vec add_vec(const FieldPtr& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f->add(a[i], b[i]);
    return out;
}

Vec scale_vec(const FieldPtr& f, const Scalar& c, const Vec& a) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f->mul(c, a[i]);
    return out;
}

bool is_zero_vec(const FieldPtr& f, const Vec& a) {
    for (const auto& s : a)
        if (!f->is_zero(s)) return false;
    return true;
}

SubspaceBasis::SubspaceBasis(FieldPtr f, int ambient_dim)
    : f_(std::move(f)), ambient_(ambient_dim) {}

Vec SubspaceBasis::reduce(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("dimension mismatch");
    Vec r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar& c = r[pivots_[i]];
        if (f_->is_zero(c)) continue;
        Scalar factor = c;  // pivot entries are 1
        for (int j = 0; j < ambient_; ++j)
            r[j] = f_->sub(r[j], f_->mul(factor, rows_[i][j]));
    }
    return r;
}

bool SubspaceBasis::contains(const Vec& v) const { return is_zero_vec(f_, reduce(v)); }

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
    for (const auto& r : other.rows_)
        if (!contains(r)) return false;
    return true;
}

bool SubspaceBasis::equals(const SubspaceBasis& other) const {
    if (ambient_ != other.ambient_ || dim() != other.dim()) return false;
    if (pivots_ != other.pivots_) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (int j = 0; j < ambient_; ++j)
            if (!f_->eq(rows_[i][j], other.rows_[i][j])) return false;
    return true;
}

bool SubspaceBasis::insert(const Vec& v) {
    Vec r = reduce(v);
    int piv = -1;
    for (int j = 0; j < ambient_; ++j)
        if (!f_->is_zero(r[j])) {
            piv = j;
            break;
        }
    if (piv < 0) return false;
    Scalar inv = f_->inv(r[piv]);
    for (int j = 0; j < ambient_; ++j) r[j] = f_->mul(inv, r[j]);
    // clear the new pivot column from existing rows
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar& c = rows_[i][piv];
        if (f_->is_zero(c)) continue;
        Scalar factor = c;
        for (int j = 0; j < ambient_; ++j)
            rows_[i][j] = f_->sub(rows_[i][j], f_->mul(factor, r[j]));
    }
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, piv);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
}

Matrix SubspaceBasis::to_matrix() const { return Matrix::from_rows(f_, rows_); }

SubspaceBasis rref(const Matrix& m) {
    SubspaceBasis b(m.field(), m.cols());
    for (int i = 0; i < m.rows(); ++i) b.insert(m.row(i));
    return b;
}

int rank(const Matrix& m) { return rref(m).dim(); }

SubspaceBasis nullspace(const Matrix& m) {
    const FieldPtr& f = m.field();
    SubspaceBasis r = rref(m);
    SubspaceBasis null(f, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : r.pivots()) is_pivot[p] = true;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(f, m.cols());
        v[free] = f->one();
        for (int i = 0; i < r.dim(); ++i)
            v[r.pivots()[i]] = f->neg(r.rows()[i][free]);
        null.insert(v);
    }
    return null;
}

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch");
    SubspaceBasis out = a;
    for (const auto& r : b.rows()) out.insert(r);
    return out;
}

SubspaceBasis subspace_intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch");
    const FieldPtr& f = a.field();
    int n = a.ambient();
    SubspaceBasis wide(f, 2 * n);
    for (const auto& r : a.rows()) {
        Vec v(2 * n, f->zero());
        std::copy(r.begin(), r.end(), v.begin());
        std::copy(r.begin(), r.end(), v.begin() + n);
        wide.insert(v);
    }
    for (const auto& r : b.rows()) {
        Vec v(2 * n, f->zero());
        std::copy(r.begin(), r.end(), v.begin());
        wide.insert(v);
    }
    // Echelon rows whose left half vanished carry an intersection basis in
    // their right half.
    SubspaceBasis out(f, n);
    for (int i = 0; i < wide.dim(); ++i) {
        if (wide.pivots()[i] < n) continue;
        out.insert(Vec(wide.rows()[i].begin() + n, wide.rows()[i].end()));
    }
    return out;
}

SpinResult spin(const FieldPtr& f, int ambient_dim, const std::vector<Vec>& seeds,
                const std::vector<LinearOp>& operators) {
    SpinResult res{SubspaceBasis(f, ambient_dim), {}, {}};
    std::vector<std::size_t> work;
    for (std::size_t k = 0; k < seeds.size(); ++k) {
        if (static_cast<int>(seeds[k].size()) != ambient_dim)
            throw std::invalid_argument("dimension mismatch");
        if (res.basis.insert(seeds[k])) {
            res.chain.push_back(seeds[k]);
            res.steps.push_back({-(static_cast<int>(k) + 1), -1});
            work.push_back(res.chain.size() - 1);
        }
    }
    while (!work.empty()) {
        std::size_t idx = work.front();
        work.erase(work.begin());
        Vec v = res.chain[idx];
        for (std::size_t o = 0; o < operators.size(); ++o) {
            Vec u = operators[o](v);
            if (static_cast<int>(u.size()) != ambient_dim)
                throw std::invalid_argument("operator changed dimension");
            if (res.basis.insert(u)) {
                res.chain.push_back(u);
                res.steps.push_back({static_cast<int>(idx), static_cast<int>(o)});
                work.push_back(res.chain.size() - 1);
            }
        }
    }
    for (const auto& v : res.chain)
        for (const auto& op : operators)
            if (!res.basis.contains(op(v))) throw std::logic_error("spin closure check failed");
    return res;
}

}  // namespace flagmod
