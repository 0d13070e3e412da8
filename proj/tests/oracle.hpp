#pragma once

// Independent reference computations used to check the library. They share
// no code with it beyond the GMP number types.

#include <gmpxx.h>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using Int = mpz_class;
using Rat = mpq_class;
using IntMatrix = std::vector<std::vector<Int>>;

// Fraction-free Gaussian elimination.
inline Int bareiss_det(IntMatrix m)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) {
                ++swap;
            }
            if (swap == n) {
                return 0;
            }
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

inline std::vector<Rat> cramer_solve(const IntMatrix& m, const std::vector<Int>& b)
{
    const Int det = bareiss_det(m);
    if (det == 0) {
        throw std::runtime_error("singular");
    }
    std::vector<Rat> x;
    for (std::size_t col = 0; col < m.size(); ++col) {
        IntMatrix replaced = m;
        for (std::size_t row = 0; row < m.size(); ++row) {
            replaced[row][col] = b[row];
        }
        Rat value(bareiss_det(replaced), det);
        value.canonicalize();
        x.push_back(value);
    }
    return x;
}

// Every leading principal minor of a negative definite matrix has sign (-1)^k.
inline bool negative_definite(const IntMatrix& m)
{
    for (std::size_t k = 1; k <= m.size(); ++k) {
        IntMatrix lead(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                lead[i][j] = m[i][j];
            }
        }
        const Int d = bareiss_det(lead);
        if ((k % 2 == 1 && d >= 0) || (k % 2 == 0 && d <= 0)) {
            return false;
        }
    }
    return true;
}

// Continued fraction a_1 - 1/(a_2 - ...) evaluated from the far end.
inline Rat continued_fraction(const std::vector<int>& chain)
{
    Rat x = chain.back();
    for (std::size_t i = chain.size() - 1; i-- > 0;) {
        x = Rat(chain[i]) - 1 / x;
    }
    x.canonicalize();
    return x;
}

inline IntMatrix chain_matrix(const std::vector<int>& chain)
{
    IntMatrix m(chain.size(), std::vector<Int>(chain.size(), 0));
    for (std::size_t i = 0; i < chain.size(); ++i) {
        m[i][i] = -chain[i];
        if (i + 1 < chain.size()) {
            m[i][i + 1] = 1;
            m[i + 1][i] = 1;
        }
    }
    return m;
}

// Log discrepancies of a chain hanging off one boundary curve at its first end.
inline std::vector<Rat> chain_discrepancies(const std::vector<int>& chain)
{
    std::vector<Int> rhs;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const int degree = 1 + (i + 1 < chain.size() ? 1 : 0);
        rhs.push_back(-2 + degree);
    }
    return cramer_solve(chain_matrix(chain), rhs);
}

// Boundary configuration as self-intersections plus an adjacency matrix.
struct Config {
    std::vector<std::string> names;
    std::vector<int> self;
    std::vector<std::vector<int>> adj;

    std::size_t index(const std::string& name) const
    {
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i] == name) {
                return i;
            }
        }
        throw std::runtime_error("unknown " + name);
    }

    std::size_t add(const std::string& name, int s)
    {
        names.push_back(name);
        self.push_back(s);
        for (auto& row : adj) {
            row.push_back(0);
        }
        adj.emplace_back(names.size(), 0);
        return names.size() - 1;
    }

    void connect(std::size_t a, std::size_t b, int value = 1)
    {
        adj[a][b] = value;
        adj[b][a] = value;
    }

    std::size_t degree(std::size_t v) const
    {
        std::size_t d = 0;
        for (int x : adj[v]) {
            d += x;
        }
        return d;
    }

    std::size_t edge_count() const
    {
        std::size_t total = 0;
        for (std::size_t v = 0; v < names.size(); ++v) {
            total += degree(v);
        }
        return total / 2;
    }

    void blow_up_interior(const std::string& curve, const std::string& name)
    {
        const auto c = index(curve);
        const auto e = add(name, -1);
        self[c] -= 1;
        connect(c, e);
    }

    void blow_up_node(const std::string& a_name, const std::string& b_name, const std::string& name)
    {
        const auto a = index(a_name);
        const auto b = index(b_name);
        if (!adj[a][b]) {
            throw std::runtime_error("no node");
        }
        const auto e = add(name, -1);
        self[a] -= 1;
        self[b] -= 1;
        connect(a, b, 0);
        connect(a, e);
        connect(b, e);
    }

    IntMatrix matrix(const std::vector<std::size_t>& ids) const
    {
        IntMatrix m(ids.size(), std::vector<Int>(ids.size(), 0));
        for (std::size_t i = 0; i < ids.size(); ++i) {
            for (std::size_t j = 0; j < ids.size(); ++j) {
                m[i][j] = i == j ? Int(self[ids[i]]) : Int(adj[ids[i]][ids[j]]);
            }
        }
        return m;
    }

    // Log discrepancies of the `contracted` curves from adjunction.
    std::map<std::string, Rat> log_discrepancies(const std::set<std::string>& contracted) const
    {
        std::vector<std::size_t> ids;
        for (const auto& n : contracted) {
            ids.push_back(index(n));
        }
        std::vector<Int> rhs;
        for (auto v : ids) {
            rhs.push_back(-2 + static_cast<long>(degree(v)));
        }
        const auto a = cramer_solve(matrix(ids), rhs);
        std::map<std::string, Rat> out;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            out[names[ids[i]]] = a[i];
        }
        return out;
    }

    // C^2 on the surface where every curve outside `keep` is contracted.
    Rat pushed_self_intersection(const std::string& curve, const std::set<std::string>& keep) const
    {
        const auto c = index(curve);
        std::vector<std::size_t> others;
        for (std::size_t v = 0; v < names.size(); ++v) {
            if (!keep.count(names[v])) {
                others.push_back(v);
            }
        }
        Rat total = self[c];
        if (others.empty()) {
            return total;
        }
        std::vector<Int> rhs;
        for (auto v : others) {
            rhs.push_back(-adj[c][v]);
        }
        const auto beta = cramer_solve(matrix(others), rhs);
        for (std::size_t i = 0; i < others.size(); ++i) {
            total += beta[i] * adj[c][others[i]];
        }
        return total;
    }
};

} // namespace oracle
