#include "capbound/ffld.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace capbound {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("PrimeField: modulus is not prime");
}

bool PrimeField::is_prime(std::uint32_t m) {
    if (m < 2) return false;
    if (m % 2 == 0) return m == 2;
    for (std::uint32_t f = 3; static_cast<std::uint64_t>(f) * f <= m; f += 2)
        if (m % f == 0) return false;
    return true;
}

std::uint32_t PrimeField::reduce(std::int64_t v) const {
    std::int64_t r = v % p_;
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeField::mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    a %= p_;
    if (a == 0) throw std::domain_error("PrimeField: zero has no inverse");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    if (t < 0) t += p_;
    return static_cast<std::uint32_t>(t);
}

std::uint32_t PrimeField::pow(std::uint32_t base, std::uint64_t exp) const {
    std::uint32_t result = 1 % p_;
    base %= p_;
    while (exp > 0) {
        if (exp & 1) result = mul(result, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return result;
}

FieldVector::FieldVector(std::uint32_t p, std::vector<std::uint32_t> entries)
    : p_(p), entries_(std::move(entries)) {
    PrimeField field(p);
    for (auto& e : entries_) e %= p_;
}

std::uint64_t FieldVector::packed_key() const {
    std::uint64_t key = 0;
    for (std::uint32_t e : entries_) {
        if (key > (std::numeric_limits<std::uint64_t>::max() - e) / p_)
            throw std::overflow_error("FieldVector: packed key overflows 64 bits");
        key = key * p_ + e;
    }
    return key;
}

FieldVector FieldVector::from_key(std::uint32_t p, std::size_t n, std::uint64_t key) {
    std::vector<std::uint32_t> entries(n);
    for (std::size_t i = n; i-- > 0;) {
        entries[i] = static_cast<std::uint32_t>(key % p);
        key /= p;
    }
    if (key != 0) throw std::out_of_range("FieldVector: key too large for p^n");
    return FieldVector(p, std::move(entries));
}

ProgressionSpec::ProgressionSpec(std::uint32_t p, std::uint32_t alpha, std::uint32_t beta,
                                 std::uint32_t gamma)
    : p_(p) {
    PrimeField field(p);
    alpha_ = alpha % p;
    beta_ = beta % p;
    gamma_ = gamma % p;
    if ((alpha_ + beta_ + gamma_) % p != 0)
        throw std::invalid_argument("ProgressionSpec: coefficients must sum to zero mod p");
    if (gamma_ == 0) throw std::invalid_argument("ProgressionSpec: gamma must be nonzero");
}

ProgressionSpec ProgressionSpec::arithmetic_progression(std::uint32_t p) {
    return ProgressionSpec(p, 1, p - 2, 1);
}

PointSet::PointSet(std::uint32_t p, std::size_t n) : p_(p), n_(n) { PrimeField field(p); }

PointSet::PointSet(std::uint32_t p, std::size_t n, const std::vector<FieldVector>& points)
    : p_(p), n_(n) {
    PrimeField field(p);
    keys_.reserve(points.size());
    for (const auto& pt : points) {
        if (pt.p() != p || pt.dim() != n)
            throw std::invalid_argument("PointSet: point has mismatched (p, n)");
        keys_.push_back(pt.packed_key());
    }
    std::sort(keys_.begin(), keys_.end());
    if (std::adjacent_find(keys_.begin(), keys_.end()) != keys_.end())
        throw std::invalid_argument("PointSet: duplicate point");
}

PointSet PointSet::from_keys(std::uint32_t p, std::size_t n, std::vector<std::uint64_t> keys) {
    PointSet set(p, n);
    for (std::uint64_t key : keys) FieldVector::from_key(p, n, key); // range check
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
        throw std::invalid_argument("PointSet: duplicate point");
    set.keys_ = std::move(keys);
    return set;
}

bool PointSet::contains(std::uint64_t key) const {
    return std::binary_search(keys_.begin(), keys_.end(), key);
}

std::vector<FieldVector> PointSet::points() const {
    std::vector<FieldVector> out;
    out.reserve(keys_.size());
    for (std::uint64_t key : keys_) out.push_back(FieldVector::from_key(p_, n_, key));
    return out;
}

FieldVector vec_combine(std::uint32_t a, const FieldVector& x, std::uint32_t b,
                        const FieldVector& y, std::uint32_t c, const FieldVector& z) {
    if (x.p() != y.p() || y.p() != z.p())
        throw std::invalid_argument("vec_combine: modulus mismatch");
    if (x.dim() != y.dim() || y.dim() != z.dim())
        throw std::invalid_argument("vec_combine: dimension mismatch");
    PrimeField field(x.p());
    std::vector<std::uint32_t> entries(x.dim());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        std::int64_t v = static_cast<std::int64_t>(a) * x.entries()[i] +
                         static_cast<std::int64_t>(b) * y.entries()[i] +
                         static_cast<std::int64_t>(c) * z.entries()[i];
        entries[i] = field.reduce(v);
    }
    return FieldVector(x.p(), std::move(entries));
}

bool progression_free_cubic(const PointSet& A, const ProgressionSpec& spec) {
    if (A.p() != spec.p()) throw std::invalid_argument("progression_free_cubic: modulus mismatch");
    auto points = A.points();
    for (const auto& x : points)
        for (const auto& y : points)
            for (const auto& z : points) {
                auto combined = vec_combine(spec.alpha(), x, spec.beta(), y, spec.gamma(), z);
                bool zero = std::all_of(combined.entries().begin(), combined.entries().end(),
                                        [](std::uint32_t e) { return e == 0; });
                if (zero && !(x == y && y == z)) return false;
            }
    return true;
}

bool progression_free_quadratic(const PointSet& A, const ProgressionSpec& spec) {
    if (A.p() != spec.p())
        throw std::invalid_argument("progression_free_quadratic: modulus mismatch");
    PrimeField field(spec.p());
    // gamma*z = -(alpha*x + beta*y), so z is determined by (x, y).
    std::uint32_t neg_inv_gamma = field.neg(field.inv(spec.gamma()));
    auto points = A.points();
    std::vector<std::uint32_t> z_entries(A.dim());
    for (const auto& x : points)
        for (const auto& y : points) {
            for (std::size_t i = 0; i < z_entries.size(); ++i) {
                std::int64_t v = static_cast<std::int64_t>(spec.alpha()) * x.entries()[i] +
                                 static_cast<std::int64_t>(spec.beta()) * y.entries()[i];
                z_entries[i] = field.mul(neg_inv_gamma, field.reduce(v));
            }
            FieldVector z(A.p(), z_entries);
            if (A.contains(z.packed_key()) && !(x == y && y == z)) return false;
        }
    return true;
}

bool is_progression_free(const PointSet& A, const ProgressionSpec& spec) {
    if (A.size() > 64) return progression_free_quadratic(A, spec);
    return progression_free_cubic(A, spec);
}

void write_point_set_csv(const PointSet& set, std::ostream& out) {
    out << "p=" << set.p() << ",n=" << set.dim() << "\n";
    for (const auto& pt : set.points()) {
        const auto& entries = pt.entries();
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (i > 0) out << ",";
            out << entries[i];
        }
        out << "\n";
    }
}

void write_point_set_csv(const PointSet& set, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_point_set_csv(set, out);
}

namespace {

std::uint32_t parse_residue(const std::string& token, std::uint32_t p) {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(token, &used);
    } catch (const std::exception&) {
        throw std::runtime_error("point set CSV: bad residue '" + token + "'");
    }
    if (used != token.size() || value >= p)
        throw std::runtime_error("point set CSV: residue out of range: '" + token + "'");
    return static_cast<std::uint32_t>(value);
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

} // namespace

PointSet read_point_set_csv(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("point set CSV: missing header");
    header = strip_cr(header);
    std::uint32_t p = 0;
    std::size_t n = 0;
    if (std::sscanf(header.c_str(), "p=%u,n=%zu", &p, &n) != 2)
        throw std::runtime_error("point set CSV: header must be p=<p>,n=<n>");

    std::vector<FieldVector> points;
    std::string line;
    while (std::getline(in, line)) {
        line = strip_cr(line);
        if (line.empty()) continue;
        std::vector<std::uint32_t> entries;
        std::stringstream ss(line);
        std::string token;
        while (std::getline(ss, token, ',')) entries.push_back(parse_residue(token, p));
        if (entries.size() != n)
            throw std::runtime_error("point set CSV: row has wrong arity: '" + line + "'");
        points.emplace_back(p, std::move(entries));
    }
    return PointSet(p, n, points);
}

PointSet read_point_set_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return read_point_set_csv(in);
}

} // namespace capbound
