#include "logsark/hj.hpp"

#include "logsark/error.hpp"
#include "logsark/linalg.hpp"

#include <numeric>

namespace logsark {

void check_chain(std::span<const int> chain)
{
    if (chain.empty()) {
        throw Error(ErrorKind::InvalidChain, "empty chain");
    }
    for (int a : chain) {
        if (a < 2) {
            throw Error(ErrorKind::InvalidChain, "chain weight " + std::to_string(a) + " is below 2");
        }
    }
}

void check_type(const HJType& type)
{
    if (type.n < 2 || type.q <= 0 || type.q >= type.n || std::gcd(type.n, type.q) != 1) {
        throw Error(ErrorKind::InvalidType,
                    "(" + std::to_string(type.n) + "," + std::to_string(type.q) + ") is not a valid A_{n,q}");
    }
}

HJType chain_to_type(std::span<const int> chain)
{
    check_chain(chain);
    // Fold from the far end: p/q <- a_j - q/p.
    std::int64_t p = chain.back();
    std::int64_t q = 1;
    for (std::size_t j = chain.size() - 1; j-- > 0;) {
        const std::int64_t next = chain[j] * p - q;
        q = p;
        p = next;
    }
    return {p, q};
}

HJChain type_to_chain(const HJType& type)
{
    check_type(type);
    HJChain chain;
    std::int64_t n = type.n;
    std::int64_t q = type.q;
    while (true) {
        const std::int64_t a = (n + q - 1) / q;
        chain.push_back(static_cast<int>(a));
        const std::int64_t rest = a * q - n;
        if (rest == 0) {
            break;
        }
        n = q;
        q = rest;
    }
    return chain;
}

std::vector<Rational> chain_log_discrepancies(std::span<const int> chain)
{
    check_chain(chain);
    const std::size_t s = chain.size();
    RationalMatrix m(s, s);
    std::vector<Rational> rhs(s);
    for (std::size_t k = 0; k < s; ++k) {
        m(k, k) = -chain[k];
        if (k + 1 < s) {
            m(k, k + 1) = 1;
            m(k + 1, k) = 1;
        }
        // Neighbours of C_k in the boundary: C_{k-1} (or the boundary curve) and C_{k+1}.
        const int degree = 1 + (k + 1 < s ? 1 : 0);
        rhs[k] = -2 + degree;
    }
    return solve_linear(std::move(m), std::move(rhs));
}

std::string type_name(const HJType& type)
{
    return "A_{" + std::to_string(type.n) + "," + std::to_string(type.q) + "}";
}

} // namespace logsark
