#include "hullwalk/combinatorics.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace hullwalk::comb {

namespace {

// Triangular tables are grown on demand under a lock; concurrent readers of an
// already-built row never observe a partially built one because rows are only
// appended while the lock is held and lookups take the lock too (the tables
// are small and the lock is uncontended in practice).
constexpr long kTriangleCap = 128;

class StirlingTriangle {
  public:
    enum class Kind { first, second };

    explicit StirlingTriangle(Kind kind) : kind_(kind) { rows_.push_back({BigInt(1)}); }

    BigInt at(long n, long m) {
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<long>(rows_.size()) <= n) {
            const auto& prev = rows_.back();
            const long nn = static_cast<long>(rows_.size());
            std::vector<BigInt> row(static_cast<std::size_t>(nn) + 1);
            for (long k = 1; k <= nn; ++k) {
                const BigInt up = k <= nn - 1 ? prev[static_cast<std::size_t>(k)] : BigInt(0);
                const BigInt diag = prev[static_cast<std::size_t>(k - 1)];
                row[static_cast<std::size_t>(k)] =
                    kind_ == Kind::first ? diag + (nn - 1) * up : diag + k * up;
            }
            rows_.push_back(std::move(row));
        }
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
    }

  private:
    Kind kind_;
    std::mutex mu_;
    std::vector<std::vector<BigInt>> rows_;
};

// Exact c(n, m) for large n and small m: multiply out t(t+1)...(t+n-1)
// keeping only coefficients of degree <= m. The full triangle at n ~ 2000
// would hold millions of multi-thousand-digit entries; this is O(n*m).
BigInt stirling_first_truncated(long n, long m) {
    std::vector<BigInt> c(static_cast<std::size_t>(m) + 1);
    c[0] = 1;  // empty product
    for (long i = 0; i < n; ++i) {
        for (long j = m; j >= 1; --j) c[static_cast<std::size_t>(j)] =
            c[static_cast<std::size_t>(j)] * i + c[static_cast<std::size_t>(j - 1)];
        c[0] *= i;
    }
    return c[static_cast<std::size_t>(m)];
}

void check_strictly_increasing(std::span<const int> indices, int lo, int hi, const char* what) {
    if (indices.empty()) throw std::invalid_argument(std::string(what) + ": empty index tuple");
    int prev = lo - 1;
    for (int i : indices) {
        if (i <= prev || i > hi)
            throw std::invalid_argument(std::string(what) +
                                        ": indices must be strictly increasing within range");
        prev = i;
    }
}

}  // namespace

BigInt stirling_first(long n, long m) {
    if (n < 0) throw std::invalid_argument("stirling_first: n must be >= 0");
    if (m < 0 || m > n) return 0;
    if (n == 0) return m == 0 ? 1 : 0;
    if (m == 0) return 0;
    if (n <= kTriangleCap) {
        static StirlingTriangle table(StirlingTriangle::Kind::first);
        return table.at(n, m);
    }
    return stirling_first_truncated(n, m);
}

BigInt stirling_second(long n, long m) {
    if (n < 0) throw std::invalid_argument("stirling_second: n must be >= 0");
    if (m < 0 || m > n) return 0;
    if (n == 0) return m == 0 ? 1 : 0;
    if (m == 0) return 0;
    if (n > kTriangleCap)
        throw std::invalid_argument("stirling_second: n exceeds table capacity");
    static StirlingTriangle table(StirlingTriangle::Kind::second);
    return table.at(n, m);
}

IntPolynomial rising_factorial_poly(unsigned n) {
    IntPolynomial p = IntPolynomial::one();
    for (unsigned i = 0; i < n; ++i) p *= IntPolynomial{static_cast<long>(i), 1};
    return p;
}

IntPolynomial b_poly(unsigned n) {
    IntPolynomial p = IntPolynomial::one();
    for (unsigned i = 1; i <= n; ++i) p *= IntPolynomial{static_cast<long>(2 * i - 1), 1};
    return p;
}

IntPolynomial gap_poly(unsigned g) {
    if (g == 0) throw std::invalid_argument("gap_poly: gap length must be >= 1");
    IntPolynomial p = IntPolynomial::one();
    for (unsigned i = 1; i < g; ++i) p *= IntPolynomial{static_cast<long>(i), 1};
    return p;
}

IntPolynomial walk_face_poly(int n, std::span<const int> indices) {
    if (n < 1) throw std::invalid_argument("walk_face_poly: n must be >= 1");
    check_strictly_increasing(indices, 0, n, "walk_face_poly");
    IntPolynomial p = b_poly(static_cast<unsigned>(indices.front()));
    p *= b_poly(static_cast<unsigned>(n - indices.back()));
    for (std::size_t l = 0; l + 1 < indices.size(); ++l)
        p *= gap_poly(static_cast<unsigned>(indices[l + 1] - indices[l]));
    return p;
}

IntPolynomial bridge_face_poly(int n, std::span<const int> indices) {
    if (n < 2) throw std::invalid_argument("bridge_face_poly: n must be >= 2");
    check_strictly_increasing(indices, 0, n - 1, "bridge_face_poly");
    IntPolynomial p = IntPolynomial::one();
    for (std::size_t l = 0; l + 1 < indices.size(); ++l)
        p *= gap_poly(static_cast<unsigned>(indices[l + 1] - indices[l]));
    // wrap-around gap from the last index back to the first
    p *= gap_poly(static_cast<unsigned>(n + indices.front() - indices.back()));
    return p;
}

IntPolynomial joint_absorption_poly(std::span<const int> walk_lengths,
                                    std::span<const int> bridge_lengths) {
    if (walk_lengths.empty() && bridge_lengths.empty())
        throw std::invalid_argument("joint_absorption_poly: need at least one walk or bridge");
    IntPolynomial p = IntPolynomial::one();
    for (int n : walk_lengths) {
        if (n < 1) throw std::invalid_argument("joint_absorption_poly: walk length must be >= 1");
        p *= b_poly(static_cast<unsigned>(n));
    }
    for (int m : bridge_lengths) {
        if (m < 2) throw std::invalid_argument("joint_absorption_poly: bridge length must be >= 2");
        p *= gap_poly(static_cast<unsigned>(m));
    }
    return p;
}

BigInt hat_c(int N) {
    if (N < 1) throw std::invalid_argument("hat_c: N must be >= 1");
    BigInt acc = 0;
    for (int k = 1; k <= N; ++k) acc += factorial(static_cast<unsigned>(k - 1)) * stirling_second(N, k);
    return acc;
}

BigInt ordered_bell(int N) {
    if (N < 0) throw std::invalid_argument("ordered_bell: N must be >= 0");
    BigInt acc = 0;
    for (int k = 0; k <= N; ++k) acc += factorial(static_cast<unsigned>(k)) * stirling_second(N, k);
    return acc;
}

}  // namespace hullwalk::comb
