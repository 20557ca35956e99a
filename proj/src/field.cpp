#include "qhl/field.hpp"

#include "qhl/errors.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

namespace qhl {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

const CyclotomicContext* cyclotomic_context_for(std::uint32_t n)
{
    static std::mutex mu;
    static std::map<std::uint32_t, std::unique_ptr<CyclotomicContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) {
        slot = std::make_unique<CyclotomicContext>();
        slot->n = n;
        slot->phi = cyclotomic_polynomial(n);
    }
    return slot.get();
}

// Dense Gauss-Jordan over Q for the small systems behind cyclotomic inverses.
bool solve_rational(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b,
                    std::vector<mpq_class>& x)
{
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0)
            ++piv;
        if (piv == n)
            return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        mpq_class inv = 1 / a[col][col];
        for (std::size_t j = col; j < n; ++j)
            a[col][j] *= inv;
        b[col] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            mpq_class f = a[r][col];
            for (std::size_t j = col; j < n; ++j)
                a[r][j] -= f * a[col][j];
            b[r] -= f * b[col];
        }
    }
    x = std::move(b);
    return true;
}

} // namespace

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (p % d == 0)
            return p == d;
    }
    for (std::uint64_t d = 17; d * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

std::vector<mpz_class> cyclotomic_polynomial(std::uint32_t n)
{
    if (n == 0)
        throw UnsupportedField("cyclotomic order must be positive");
    // x^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<mpz_class> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (std::uint32_t d = 1; d < n; ++d) {
        if (n % d)
            continue;
        std::vector<mpz_class> den = cyclotomic_polynomial(d);
        const std::size_t dd = den.size() - 1;
        std::vector<mpz_class> quo(num.size() - dd, 0);
        for (std::size_t k = num.size(); k-- > dd;) {
            mpz_class c = num[k]; // den is monic
            quo[k - dd] = c;
            if (c != 0)
                for (std::size_t j = 0; j <= dd; ++j)
                    num[k - dd + j] -= c * den[j];
        }
        num = std::move(quo);
    }
    return num;
}

// ---------------------------------------------------------------- FieldSpec

FieldSpec FieldSpec::prime(std::uint32_t p)
{
    if (p >= (1u << 31) || !is_prime(p))
        throw UnsupportedField("prime field needs a prime p < 2^31, got " + std::to_string(p));
    FieldSpec f;
    f.kind_ = Kind::PrimeField;
    f.param_ = p;
    return f;
}

FieldSpec FieldSpec::cyclotomic(std::uint32_t n)
{
    if (n == 0)
        throw UnsupportedField("cyclotomic order must be positive");
    FieldSpec f;
    f.kind_ = Kind::Cyclotomic;
    f.param_ = n;
    f.cyclo_ = cyclotomic_context_for(n);
    return f;
}

std::size_t FieldSpec::degree() const noexcept
{
    return kind_ == Kind::Cyclotomic ? cyclo_->degree() : 1;
}

const CyclotomicContext& FieldSpec::cyclotomic_context() const
{
    if (kind_ != Kind::Cyclotomic)
        throw UnsupportedField("not a cyclotomic field");
    return *cyclo_;
}

std::string FieldSpec::to_string() const
{
    switch (kind_) {
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "F_" + std::to_string(param_);
    case Kind::Cyclotomic: return "Q(zeta_" + std::to_string(param_) + ")";
    }
    return "?";
}

// ------------------------------------------------------------------- Scalar

Scalar::Scalar(const FieldSpec& field) : field_(field)
{
    if (field_.kind() == FieldSpec::Kind::Cyclotomic)
        c_.assign(field_.degree(), mpq_class(0));
}

Scalar::Scalar(const FieldSpec& field, long value) : Scalar(field)
{
    switch (field_.kind()) {
    case FieldSpec::Kind::Rationals: q_ = value; break;
    case FieldSpec::Kind::PrimeField: {
        long p = field_.parameter();
        long r = value % p;
        r_ = static_cast<std::uint64_t>(r < 0 ? r + p : r);
        break;
    }
    case FieldSpec::Kind::Cyclotomic: c_[0] = value; break;
    }
}

Scalar::Scalar(const FieldSpec& field, const mpq_class& value) : Scalar(field)
{
    if (value.get_den() == 0)
        throw NotInvertible("zero denominator");
    switch (field_.kind()) {
    case FieldSpec::Kind::Rationals:
        q_ = value;
        q_.canonicalize();
        break;
    case FieldSpec::Kind::PrimeField: {
        mpz_class p = field_.parameter();
        mpz_class num = value.get_num() % p;
        mpz_class den = value.get_den() % p;
        if (num < 0)
            num += p;
        if (den == 0)
            throw NotInvertible("denominator vanishes in " + field_.to_string());
        std::uint64_t d = den.get_ui();
        std::uint64_t pp = field_.parameter();
        r_ = mul_mod(num.get_ui(), pow_mod(d, pp - 2, pp), pp);
        break;
    }
    case FieldSpec::Kind::Cyclotomic:
        c_[0] = value;
        c_[0].canonicalize();
        break;
    }
}

Scalar Scalar::root_of_unity(const FieldSpec& f)
{
    if (f.kind() != FieldSpec::Kind::Cyclotomic)
        throw UnsupportedField("root_of_unity needs a cyclotomic field");
    std::vector<mpq_class> c(2, 0);
    c[1] = 1;
    return from_coefficients(f, std::move(c));
}

Scalar Scalar::from_coefficients(const FieldSpec& f, std::vector<mpq_class> coeffs)
{
    if (f.kind() != FieldSpec::Kind::Cyclotomic) {
        if (coeffs.size() > 1)
            throw ParseError("coefficient list given for a non-cyclotomic field");
        return Scalar(f, coeffs.empty() ? mpq_class(0) : coeffs[0]);
    }
    Scalar s(f);
    for (auto& c : coeffs)
        c.canonicalize();
    s.reduce_poly(coeffs);
    s.c_ = std::move(coeffs);
    return s;
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text)
{
    mpq_class v;
    if (text.empty() || v.set_str(text, 10) != 0)
        throw ParseError("bad scalar '" + text + "'");
    if (v.get_den() == 0)
        throw ParseError("zero denominator in '" + text + "'");
    v.canonicalize();
    if (f.kind() == FieldSpec::Kind::PrimeField && v.get_den() != 1)
        throw ParseError("prime-field scalars are decimal residues, got '" + text + "'");
    return Scalar(f, v);
}

void Scalar::reduce_poly(std::vector<mpq_class>& poly) const
{
    const auto& phi = field_.cyclotomic_context().phi;
    const std::size_t d = phi.size() - 1;
    for (std::size_t k = poly.size(); k-- > d;) {
        if (poly[k] == 0)
            continue;
        mpq_class c = poly[k];
        for (std::size_t j = 0; j <= d; ++j)
            poly[k - d + j] -= c * phi[j];
    }
    poly.resize(d, mpq_class(0));
}

bool Scalar::is_zero() const noexcept
{
    switch (field_.kind()) {
    case FieldSpec::Kind::Rationals: return sgn(q_) == 0;
    case FieldSpec::Kind::PrimeField: return r_ == 0;
    case FieldSpec::Kind::Cyclotomic:
        for (const auto& c : c_)
            if (sgn(c) != 0)
                return false;
        return true;
    }
    return false;
}

bool Scalar::is_one() const noexcept
{
    switch (field_.kind()) {
    case FieldSpec::Kind::Rationals: return q_ == 1;
    case FieldSpec::Kind::PrimeField: return r_ == 1;
    case FieldSpec::Kind::Cyclotomic:
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != (i == 0 ? 1 : 0))
                return false;
        return true;
    }
    return false;
}

void Scalar::check_field(const Scalar& o) const
{
    if (field_ != o.field_)
        throw FieldMismatch("scalar fields differ: " + field_.to_string() + " vs " +
                            o.field_.to_string());
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw NotInvertible("division by zero");
    Scalar r(field_);
    switch (field_.kind()) {
    case FieldSpec::Kind::Rationals: r.q_ = 1 / q_; break;
    case FieldSpec::Kind::PrimeField: {
        std::uint64_t p = field_.parameter();
        r.r_ = pow_mod(r_, p - 2, p);
        break;
    }
    case FieldSpec::Kind::Cyclotomic: {
        // Columns of the matrix of multiplication by this element.
        const std::size_t d = c_.size();
        std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d, 0));
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<mpq_class> col(2 * d, 0);
            for (std::size_t i = 0; i < d; ++i)
                col[i + j] = c_[i];
            reduce_poly(col);
            for (std::size_t i = 0; i < d; ++i)
                m[i][j] = col[i];
        }
        std::vector<mpq_class> rhs(d, 0), x;
        rhs[0] = 1;
        if (!solve_rational(std::move(m), std::move(rhs), x))
            throw InternalInconsistency("cyclotomic element has a singular multiplication matrix");
        r.c_ = std::move(x);
        break;
    }
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    check_field(o);
    switch (field_.kind()) {
    case FieldSpec::Kind::Rationals: q_ += o.q_; break;
    case FieldSpec::Kind::PrimeField: {
        r_ += o.r_;
        if (r_ >= field_.parameter())
            r_ -= field_.parameter();
        break;
    }
    case FieldSpec::Kind::Cyclotomic:
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] += o.c_[i];
        break;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    check_field(o);
    switch (field_.kind()) {
    case FieldSpec::Kind::Rationals: q_ -= o.q_; break;
    case FieldSpec::Kind::PrimeField:
        r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + field_.parameter() - o.r_;
        break;
    case FieldSpec::Kind::Cyclotomic:
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] -= o.c_[i];
        break;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    check_field(o);
    switch (field_.kind()) {
    case FieldSpec::Kind::Rationals: q_ *= o.q_; break;
    case FieldSpec::Kind::PrimeField: r_ = mul_mod(r_, o.r_, field_.parameter()); break;
    case FieldSpec::Kind::Cyclotomic: {
        const std::size_t d = c_.size();
        std::vector<mpq_class> prod(2 * d, 0);
        for (std::size_t i = 0; i < d; ++i) {
            if (sgn(c_[i]) == 0)
                continue;
            for (std::size_t j = 0; j < d; ++j)
                if (sgn(o.c_[j]) != 0)
                    prod[i + j] += c_[i] * o.c_[j];
        }
        reduce_poly(prod);
        c_ = std::move(prod);
        break;
    }
    }
    return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b)
{
    if (field_.kind() == FieldSpec::Kind::Rationals) {
        check_field(a);
        check_field(b);
        thread_local mpq_class tmp;
        mpq_mul(tmp.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
        q_ += tmp;
        return;
    }
    *this += a * b;
}

Scalar Scalar::operator-() const
{
    Scalar r(field_);
    switch (field_.kind()) {
    case FieldSpec::Kind::Rationals: r.q_ = -q_; break;
    case FieldSpec::Kind::PrimeField: r.r_ = r_ == 0 ? 0 : field_.parameter() - r_; break;
    case FieldSpec::Kind::Cyclotomic:
        for (std::size_t i = 0; i < c_.size(); ++i)
            r.c_[i] = -c_[i];
        break;
    }
    return r;
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (a.field_ != b.field_)
        return false;
    switch (a.field_.kind()) {
    case FieldSpec::Kind::Rationals: return a.q_ == b.q_;
    case FieldSpec::Kind::PrimeField: return a.r_ == b.r_;
    case FieldSpec::Kind::Cyclotomic: return a.c_ == b.c_;
    }
    return false;
}

std::string Scalar::to_string() const
{
    switch (field_.kind()) {
    case FieldSpec::Kind::Rationals: return q_.get_str();
    case FieldSpec::Kind::PrimeField: return std::to_string(r_);
    case FieldSpec::Kind::Cyclotomic: {
        std::string s = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i)
                s += ",";
            s += c_[i].get_str();
        }
        return s + "]";
    }
    }
    return "?";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.to_string();
}

} // namespace qhl
