#pragma once
// Galois-group evidence from Frobenius cycle types.
//
// For a monic polynomial f with p-integral coefficients whose reduction mod
// p is squarefree, p is unramified in the splitting field and the factor
// degrees of f mod p are the cycle type of the Frobenius element. The
// helpers here collect those types over a deterministic prime stream,
// compare them against the cycle types an expected group can produce, and
// turn suitable witnesses into a proof that the group is the full S_n.

#include "cubegal/perm.hpp"
#include "cubegal/poly_fp.hpp"
#include "cubegal/poly_q.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

namespace cubegal {

/// Outcome of reducing one polynomial at one prime.
struct Reduction {
    enum class Kind { good, bad_prime, not_squarefree };
    Kind kind = Kind::bad_prime;
    CycleType type;  // valid when kind == good
};

inline Reduction frobenius_at(const PolyQ& f, u64 p)
{
    auto r = reduce_mod_p(f, p);
    if (!r)
        return {Reduction::Kind::bad_prime, {}};
    auto t = ddf_cycle_type(*r);
    if (!t)
        return {Reduction::Kind::not_squarefree, {}};
    return {Reduction::Kind::good, std::move(*t)};
}

/// Options shared by every prime scan.
struct ScanOptions {
    unsigned jobs = 1;
};

namespace detail {

// Evaluates `fn` on consecutive primes in parallel batches and keeps the
// results in prime order. Stops once `want` results satisfy `accept`, or
// `stop` returns true on the accepted prefix, or `max_primes` primes have
// been examined. Output is independent of the job count.
template <class R>
struct PrimeRun {
    std::vector<std::pair<u64, R>> results;  // every examined prime, in order
    std::size_t accepted = 0;
};

template <class R, class Fn, class Accept, class Stop>
PrimeRun<R> run_over_primes(std::size_t want, std::size_t max_primes, unsigned jobs, Fn fn,
                            Accept accept, Stop stop)
{
    PrimeRun<R> run;
    PrimeStream stream;
    jobs = std::max(1u, jobs);
    while (run.accepted < want && run.results.size() < max_primes) {
        std::size_t batch = std::max<std::size_t>(std::size_t{16} * jobs, want - run.accepted);
        batch = std::min(batch, max_primes - run.results.size());
        std::vector<u64> primes(batch);
        for (auto& p : primes)
            p = stream.next();
        std::vector<std::optional<R>> out(batch);
        auto worker = [&](unsigned w) {
            for (std::size_t i = w; i < batch; i += jobs)
                out[i] = fn(primes[i]);
        };
        if (jobs == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < jobs; ++w)
                pool.emplace_back(worker, w);
            for (auto& t : pool)
                t.join();
        }
        for (std::size_t i = 0; i < batch && run.accepted < want; ++i) {
            run.results.emplace_back(primes[i], std::move(*out[i]));
            if (accept(run.results.back().second)) {
                ++run.accepted;
                if (stop(run))
                    return run;
            }
        }
    }
    return run;
}

}  // namespace detail

struct EvidenceProfile {
    std::string polynomial_id;
    std::size_t primes_scanned = 0;  // primes examined, good or bad
    std::vector<u64> bad_primes;     // bad reduction or not squarefree
    std::vector<u64> good_primes;
    std::vector<CycleType> observed;  // observed[i] belongs to good_primes[i]
    std::vector<int> parity_history;

    std::map<CycleType, std::size_t> histogram() const
    {
        std::map<CycleType, std::size_t> h;
        for (const auto& t : observed)
            ++h[t];
        return h;
    }
};

/// Frobenius cycle types at the first `prime_budget` good primes. Gives up
/// after examining 10x that many primes; fewer than min(5, budget) good
/// primes by then is an error.
inline EvidenceProfile scan(const PolyQ& f, std::size_t prime_budget, const ScanOptions& opts = {},
                            std::string id = {})
{
    if (f.degree() < 1)
        throw std::invalid_argument("scan: polynomial must have degree >= 1");
    auto run = detail::run_over_primes<Reduction>(
        prime_budget, 10 * prime_budget, opts.jobs, [&](u64 p) { return frobenius_at(f, p); },
        [](const Reduction& r) { return r.kind == Reduction::Kind::good; },
        [](const auto&) { return false; });
    EvidenceProfile prof;
    prof.polynomial_id = std::move(id);
    prof.primes_scanned = run.results.size();
    for (auto& [p, r] : run.results) {
        if (r.kind != Reduction::Kind::good) {
            prof.bad_primes.push_back(p);
            continue;
        }
        prof.good_primes.push_back(p);
        prof.parity_history.push_back(r.type.parity());
        prof.observed.push_back(std::move(r.type));
    }
    if (prof.good_primes.size() < std::min<std::size_t>(5, prime_budget))
        throw std::runtime_error("scan: fewer than 5 good primes within " +
                                 std::to_string(10 * prime_budget) + " primes");
    return prof;
}

/// All cycle types of (C_n wr S_m)^o acting imprimitively on n*m points,
/// for n in {2, 3}. A cycle of length l in S_m with total twist t gives one
/// (n*l)-cycle if t != 0 and n l-cycles if t == 0; twists must sum to 0.
inline std::set<CycleType> predict_wreath_types(unsigned n, unsigned m)
{
    if (n != 2 && n != 3)
        throw std::invalid_argument("predict_wreath_types: n must be 2 or 3");
    if (m == 0)
        throw std::invalid_argument("predict_wreath_types: m must be positive");
    std::set<CycleType> out;
    std::vector<unsigned> partition;
    // Partitions of m with parts in non-increasing order.
    std::function<void(unsigned, unsigned)> partitions = [&](unsigned remaining, unsigned max_part) {
        if (remaining == 0) {
            const std::size_t k = partition.size();
            std::vector<unsigned> twist(k, 0);
            while (true) {
                unsigned total = std::accumulate(twist.begin(), twist.end(), 0u);
                if (total % n == 0) {
                    std::vector<unsigned> parts;
                    for (std::size_t i = 0; i < k; ++i) {
                        if (twist[i] != 0)
                            parts.push_back(n * partition[i]);
                        else
                            parts.insert(parts.end(), n, partition[i]);
                    }
                    out.insert(CycleType(std::move(parts)));
                }
                std::size_t i = 0;
                while (i < k && ++twist[i] == n)
                    twist[i++] = 0;
                if (i == k)
                    break;
            }
            return;
        }
        for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
            partition.push_back(part);
            partitions(remaining - part, part);
            partition.pop_back();
        }
    };
    partitions(m, m);
    return out;
}

/// Witnesses that Gal(f/Q) = S_n, n = deg f:
///   * a prime with irreducible reduction: the group is transitive;
///   * a prime with type (n-1, 1): a point stabilizer is transitive on the
///     rest, so the group is 2-transitive, hence primitive;
///   * a prime whose type has exactly one part equal to a prime q <= n-3,
///     with q dividing no other part: raising that Frobenius element to the
///     lcm of the other parts leaves a single q-cycle, and a primitive group
///     containing a q-cycle with q <= n-3 contains A_n (Jordan, 1873; see
///     Wielandt, Finite Permutation Groups, Thm 13.9);
///   * disc(f) not a square: the group is not inside A_n.
/// Together these prove the group is S_n.
struct SymmetricCertificate {
    unsigned degree = 0;
    u64 transitive_prime = 0;
    u64 primitive_prime = 0;
    u64 jordan_prime = 0;
    unsigned jordan_cycle = 0;  // q
    bool disc_nonsquare = false;
};

struct Inconclusive {
    std::string reason;
};

/// The prime q of a Jordan witness in `t`, if any: q prime, q <= n-3,
/// exactly one part equals q, and q divides no other part.
inline std::optional<unsigned> jordan_cycle_length(const CycleType& t)
{
    const unsigned n = t.degree();
    for (unsigned q : t.parts()) {
        if (q < 2 || q + 3 > n || !is_prime_u64(q) || t.count(q) != 1)
            continue;
        bool isolated = true;
        for (unsigned other : t.parts())
            if (other != q && other % q == 0)
                isolated = false;
        if (isolated)
            return q;
    }
    return std::nullopt;
}

/// Rechecks every witness of `cert` against f from scratch.
inline bool revalidate(const PolyQ& f, const SymmetricCertificate& cert)
{
    const int n = f.degree();
    if (n < 4 || static_cast<unsigned>(n) != cert.degree)
        return false;
    auto type_at = [&](u64 p) -> std::optional<CycleType> {
        if (p < 2 || !is_prime_u64(p))
            return std::nullopt;
        auto r = frobenius_at(f, p);
        if (r.kind != Reduction::Kind::good)
            return std::nullopt;
        return r.type;
    };
    auto t1 = type_at(cert.transitive_prime);
    auto t2 = type_at(cert.primitive_prime);
    auto t3 = type_at(cert.jordan_prime);
    if (!t1 || !t2 || !t3)
        return false;
    const auto un = static_cast<unsigned>(n);
    if (*t1 != CycleType({un}) || *t2 != CycleType({un - 1, 1}))
        return false;
    auto q = jordan_cycle_length(*t3);
    if (!q || *q != cert.jordan_cycle)
        return false;
    return cert.disc_nonsquare && !is_square(discriminant(f));
}

/// Searches the first `prime_budget` good primes for the witnesses above.
/// A returned certificate is a proof; otherwise the answer is Inconclusive.
inline std::variant<SymmetricCertificate, Inconclusive>
certify_symmetric(const PolyQ& f, std::size_t prime_budget, const ScanOptions& opts = {})
{
    const int n = f.degree();
    if (n < 4)
        return Inconclusive{"degree below 4"};
    BigRational disc = discriminant(f);
    if (disc.is_zero())
        return Inconclusive{"polynomial is not separable"};
    const auto un = static_cast<unsigned>(n);
    SymmetricCertificate cert;
    cert.degree = un;
    cert.disc_nonsquare = !is_square(disc);
    if (!cert.disc_nonsquare)
        return Inconclusive{"discriminant is a square; group lies in A_n"};
    const CycleType full({un}), almost({un - 1, 1});
    auto run = detail::run_over_primes<Reduction>(
        prime_budget, 10 * prime_budget, opts.jobs, [&](u64 p) { return frobenius_at(f, p); },
        [](const Reduction& r) { return r.kind == Reduction::Kind::good; },
        [&](const detail::PrimeRun<Reduction>& r) {
            const auto& [p, red] = r.results.back();
            if (!cert.transitive_prime && red.type == full)
                cert.transitive_prime = p;
            if (!cert.primitive_prime && red.type == almost)
                cert.primitive_prime = p;
            if (!cert.jordan_prime) {
                if (auto q = jordan_cycle_length(red.type)) {
                    cert.jordan_prime = p;
                    cert.jordan_cycle = *q;
                }
            }
            return cert.transitive_prime && cert.primitive_prime && cert.jordan_prime;
        });
    (void)run;
    if (!cert.transitive_prime)
        return Inconclusive{"no irreducible reduction found"};
    if (!cert.primitive_prime)
        return Inconclusive{"no (n-1,1) reduction found"};
    if (!cert.jordan_prime)
        return Inconclusive{"no isolated prime cycle found"};
    return cert;
}

struct LinkageReport {
    std::size_t primes_checked = 0;
    std::vector<u64> violations;
    bool linked() const { return violations.empty(); }
};

namespace detail {

inline LinkageReport linkage(const std::vector<const PolyQ*>& polys, std::size_t prime_budget,
                             const ScanOptions& opts)
{
    struct Row {
        bool good = false;
        std::vector<int> parities;
    };
    auto run = run_over_primes<Row>(
        prime_budget, 10 * prime_budget, opts.jobs,
        [&](u64 p) {
            Row row;
            for (const PolyQ* f : polys) {
                auto r = frobenius_at(*f, p);
                if (r.kind != Reduction::Kind::good)
                    return row;
                row.parities.push_back(r.type.parity());
            }
            row.good = true;
            return row;
        },
        [](const Row& r) { return r.good; }, [](const auto&) { return false; });
    LinkageReport rep;
    for (const auto& [p, row] : run.results) {
        if (!row.good)
            continue;
        ++rep.primes_checked;
        int rhs = 1;
        for (std::size_t i = 1; i < row.parities.size(); ++i)
            rhs *= row.parities[i];
        if (row.parities[0] != rhs)
            rep.violations.push_back(p);
    }
    return rep;
}

}  // namespace detail

/// Checks parity(Frob_f) == parity(Frob_g) at the first `prime_budget`
/// primes good for both. Equal discriminant square classes force this.
inline LinkageReport parity_linkage(const PolyQ& f, const PolyQ& g, std::size_t prime_budget,
                                    const ScanOptions& opts = {})
{
    return detail::linkage({&f, &g}, prime_budget, opts);
}

/// parity(Frob_f) == parity(Frob_h2) * parity(Frob_h3) at common good primes.
inline LinkageReport triple_parity_linkage(const PolyQ& f, const PolyQ& h2, const PolyQ& h3,
                                           std::size_t prime_budget, const ScanOptions& opts = {})
{
    return detail::linkage({&f, &h2, &h3}, prime_budget, opts);
}

}  // namespace cubegal
