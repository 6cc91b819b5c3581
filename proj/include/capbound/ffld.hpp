#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace capbound {

/// Arithmetic in Z/pZ for prime p. The primality check at construction is
/// deterministic (trial division); composite moduli are rejected.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }

    std::uint32_t reduce(std::int64_t v) const;
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b % p_) % p_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const { return (p_ - a % p_) % p_; }
    std::uint32_t inv(std::uint32_t a) const; // throws on a == 0
    std::uint32_t pow(std::uint32_t base, std::uint64_t exp) const;

    static bool is_prime(std::uint32_t m);

private:
    std::uint32_t p_;
};

/// Element of F_p^n. Entries are reduced modulo p at construction.
class FieldVector {
public:
    FieldVector(std::uint32_t p, std::vector<std::uint32_t> entries);

    std::uint32_t p() const { return p_; }
    std::size_t dim() const { return entries_.size(); }
    const std::vector<std::uint32_t>& entries() const { return entries_; }

    /// Canonical base-p key with entries[0] most significant, so key order
    /// equals lexicographic order of the tuples.
    std::uint64_t packed_key() const;
    static FieldVector from_key(std::uint32_t p, std::size_t n, std::uint64_t key);

    bool operator==(const FieldVector& other) const = default;

private:
    std::uint32_t p_;
    std::vector<std::uint32_t> entries_;
};

/// Coefficients (alpha, beta, gamma) of the defining equation
/// alpha*x + beta*y + gamma*z = 0 with alpha + beta + gamma = 0 and gamma != 0.
class ProgressionSpec {
public:
    ProgressionSpec(std::uint32_t p, std::uint32_t alpha, std::uint32_t beta, std::uint32_t gamma);

    std::uint32_t p() const { return p_; }
    std::uint32_t alpha() const { return alpha_; }
    std::uint32_t beta() const { return beta_; }
    std::uint32_t gamma() const { return gamma_; }
    PrimeField field() const { return PrimeField(p_); }

    /// The three-term arithmetic-progression instance (1, p-2, 1); for p = 3
    /// this is (1, 1, 1), the cap set equation.
    static ProgressionSpec arithmetic_progression(std::uint32_t p);

private:
    std::uint32_t p_, alpha_, beta_, gamma_;
};

/// Immutable finite subset of F_p^n. Points are held as sorted packed keys;
/// duplicates and mixed (p, n) are rejected.
class PointSet {
public:
    PointSet(std::uint32_t p, std::size_t n);
    PointSet(std::uint32_t p, std::size_t n, const std::vector<FieldVector>& points);
    static PointSet from_keys(std::uint32_t p, std::size_t n, std::vector<std::uint64_t> keys);

    std::uint32_t p() const { return p_; }
    std::size_t dim() const { return n_; }
    std::size_t size() const { return keys_.size(); }
    bool empty() const { return keys_.empty(); }

    bool contains(std::uint64_t key) const;
    const std::vector<std::uint64_t>& keys() const { return keys_; }
    std::vector<FieldVector> points() const;

private:
    std::uint32_t p_;
    std::size_t n_;
    std::vector<std::uint64_t> keys_; // sorted ascending
};

/// Pointwise a*x + b*y + c*z over F_p. All three vectors must share (p, n).
FieldVector vec_combine(std::uint32_t a, const FieldVector& x,
                        std::uint32_t b, const FieldVector& y,
                        std::uint32_t c, const FieldVector& z);

/// True iff every solution of alpha*x + beta*y + gamma*z = 0 inside A has
/// x = y = z. Dispatches to the quadratic path above 64 points.
bool is_progression_free(const PointSet& A, const ProgressionSpec& spec);

/// Reference check over all |A|^3 triples.
bool progression_free_cubic(const PointSet& A, const ProgressionSpec& spec);

/// |A|^2 check: gamma is invertible, so z is determined by (x, y).
/// Mandatory above 64 points; kept alongside the cubic path and cross-tested.
bool progression_free_quadratic(const PointSet& A, const ProgressionSpec& spec);

// CSV form: header "p=<p>,n=<n>", then one point per line as n
// comma-separated residues. Out-of-range residues are rejected on read.
void write_point_set_csv(const PointSet& set, std::ostream& out);
void write_point_set_csv(const PointSet& set, const std::string& path);
PointSet read_point_set_csv(std::istream& in);
PointSet read_point_set_csv(const std::string& path);

} // namespace capbound
