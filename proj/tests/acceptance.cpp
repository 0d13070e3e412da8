// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "support.hpp"

#include <chrono>
#include <iostream>
#include <numeric>
#include <sstream>

using namespace support;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool condition, const std::string& what)
    {
        if (!condition && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::string join(const std::vector<int>& values)
{
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out << (i ? "," : "") << values[i];
    }
    out << "]";
    return out.str();
}

Outcome ramification_table()
{
    Outcome o;
    const auto r = fixture("quadric");
    const long expected[4][4] = {{1, 0, 1, 1}, {2, 1, 2, 2}, {3, 2, 3, 3}, {4, 2, 4, 2}};
    o.require(r.ledger.rows.size() == 4, "ledger has " + std::to_string(r.ledger.rows.size()) + " rows");
    for (std::size_t i = 0; i < 4 && o.pass; ++i) {
        const auto& row = r.ledger.rows[i];
        const auto lambda = row.lambda();
        o.require(row.id == "C_" + std::to_string(i + 1), "row " + row.id);
        o.require(row.c == expected[i][0] && row.b() == expected[i][1] && row.m == expected[i][2] && lambda
                      && *lambda == expected[i][3],
                  "row " + row.id + " is (" + to_string(row.c) + "," + to_string(row.b()) + "," + to_string(row.m)
                      + "," + (lambda ? to_string(*lambda) : "-") + ")");
    }
    o.detail = o.pass ? "(c,b,m,lambda) = (1,0,1,1) (2,1,2,2) (3,2,3,3) (4,2,4,2)" : o.detail;
    return o;
}

Outcome quadric_factorization()
{
    Outcome o;
    const auto seq = factorize(fixture("quadric"));
    o.require(seq.link_count() == 2, std::to_string(seq.link_count()) + " links");
    o.require(seq.pairs.size() == 3 && seq.pairs[1].chains.size() == 1, "S_1 singularities");
    if (o.pass) {
        o.require(seq.pairs[1].chain_type(0) == HJType{3, 2}, "S_1 type " + type_name(seq.pairs[1].chain_type(0)));
        o.require(seq.picard_ranks[1] == 2, "S_1 rank " + std::to_string(seq.picard_ranks[1]));
        const auto ind = index_sequence(seq).indices;
        o.require(ind == std::vector<int>{1, 2, 1}, "indices " + join(ind));
    }
    o.detail = o.pass ? "2 links; S_1: A_{3,2}, rank 2; indices [1,2,1]" : o.detail;
    return o;
}

Outcome maximal_extraction()
{
    Outcome o;
    const auto r = fixture("quadric");
    const auto seq = factorize(r);
    const auto check = maximal_extraction_check(seq, r.ledger);
    const auto best = maximal_multiplicity(r.ledger);
    o.require(check.e1 == "C_3", "E_1 = " + check.e1);
    o.require(check.lambda_e1 && *check.lambda_e1 == 3, "lambda(E_1) != 3");
    o.require(best.lambda == 3 && best.argmax == std::vector<CurveId>{"C_3"}, "lambda* = " + to_string(best.lambda));
    o.require(check.holds && !check.vacuous, check.message);
    o.detail = o.pass ? "E_1 = C_3, lambda(C_3) = 3 = lambda*" : o.detail;
    return o;
}

Outcome chain_reversion()
{
    Outcome o;
    const auto seq = factorize(fixture("reversion-sigma"));
    o.require(seq.link_count() == 2, std::to_string(seq.link_count()) + " links");
    if (o.pass) {
        std::multiset<std::string> middle;
        for (std::size_t i = 0; i < seq.pairs[1].chains.size(); ++i) {
            middle.insert(type_name(seq.pairs[1].chain_type(i)));
        }
        o.require(middle == std::multiset<std::string>{"A_{2,1}", "A_{3,2}"}, "middle " + singularity_summary(seq.pairs[1]));
        o.require(seq.pairs[2].chains.size() == 1 && seq.pairs[2].chain_type(0) == HJType{3, 1},
                  "final " + singularity_summary(seq.pairs[2]));
    }
    o.detail = o.pass ? "2 links; S_1: A_{2,1} + A_{3,2}; S_2: A_{3,1}" : o.detail;
    return o;
}

Outcome concatenation()
{
    Outcome o;
    const auto sigma = fixture("reversion-sigma");
    const auto h2 = fixture("reversion-h2");
    const auto inverse = fixture("reversion-sigma-inverse");
    const auto merged = concat_general_position(concat_general_position(sigma, h2), inverse);
    const auto seq = factorize(merged);
    o.require(seq.link_count() == 6, std::to_string(seq.link_count()) + " links");
    o.require(sequence_shapes(seq) == glued_shapes({factorize(sigma), factorize(h2), factorize(inverse)}),
              "sequence differs from the concatenation of the parts");
    const auto from_problem = factorize(build_concatenation(builtin_fixture("reversion-h0")));
    o.require(sequence_shapes(from_problem) == sequence_shapes(seq), "problem-file concatenation differs");
    o.detail = o.pass ? "6 links = 2 + 2 + 2, surfaces and links match the parts" : o.detail;
    return o;
}

Outcome jung_towers()
{
    Outcome o;
    for (int d = 2; d <= 6 && o.pass; ++d) {
        const auto seq = factorize(fixture("jung-d=" + std::to_string(d)));
        const auto tag = "d=" + std::to_string(d) + ": ";
        o.require(static_cast<int>(seq.link_count()) == 2 * d - 2, tag + std::to_string(seq.link_count()) + " links");
        std::vector<int> expected;
        for (int i = 1; i <= d; ++i) {
            expected.push_back(i);
        }
        for (int i = d - 1; i >= 1; --i) {
            expected.push_back(i);
        }
        const auto ind = index_sequence(seq).indices;
        o.require(ind == expected, tag + "indices " + join(ind));
        for (std::size_t i = 1; i + 1 < seq.pairs.size() && o.pass; ++i) {
            const auto& p = seq.pairs[i];
            o.require(p.chains.size() == 1 && p.chain_weights(0).size() == 1 && p.chain_type(0).q == 1,
                      tag + "S_" + std::to_string(i) + " is " + singularity_summary(p));
        }
    }
    o.detail = o.pass ? "d = 2..6: 2d-2 links, indices 1..d..1, all intermediate types A_{d',1}" : o.detail;
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    std::mt19937 rng(20261016);
    std::uniform_int_distribution<int> steps(1, 12);
    std::uniform_int_distribution<int> self(-2, 4);
    int scripts = 0;
    for (int trial = 0; trial < 250 && o.pass; ++trial) {
        const auto start = smooth_curve("B", self(rng));
        const auto r = run_script(start, random_script(rng, start.resolution, steps(rng)));
        std::set<CurveId> exceptional;
        for (const auto& row : r.ledger.rows) {
            exceptional.insert(row.id);
        }
        const auto linear = log_discrepancies_linear(r.graph, exceptional);
        const auto reference = to_config(r.graph).log_discrepancies(exceptional);
        for (const auto& row : r.ledger.rows) {
            o.require(row.a() == linear.at(row.id) && row.a() == reference.at(row.id),
                      "script " + std::to_string(trial) + " row " + row.id);
        }
        ++scripts;
    }
    o.detail = o.pass ? std::to_string(scripts) + " random scripts (<= 12 steps, h in {0,1}) agree exactly" : o.detail;
    return o;
}

Outcome lemma_remark()
{
    Outcome o;
    std::mt19937 rng(99);
    int tested = 0;
    for (int trial = 0; trial < 3000 && o.pass; ++trial) {
        const auto sample = random_pair(rng);
        const auto& p = sample.pair;
        if (!admissibility_check(p).ok()) {
            continue;
        }
        ++tested;
        const auto k = kplusb_degree(p, "C");
        const int n = sample.n;
        const int r = sample.r;
        std::vector<Rational> a1;
        for (auto i : p.chains_on("C")) {
            a1.push_back(chain_log_discrepancies(p.chain_weights(i)).front());
            o.require(a1.back() <= make_rational(1, 2), "(iii) a_1 > 1/2");
        }
        if (n == 1 && r == 1) {
            o.require(k == -a1.front(), "(i) (K+B).C != -a_1");
        }
        if (n == 1 && r == 0) {
            o.require(k == -1, "(i) (K+B).C != -1");
        }
        if (r >= 1) {
            o.require(Rational(n - 2 + r) > k, "(ii) upper bound");
        }
        o.require(k >= Rational(n - 2) + Rational(r, 2), "(ii) lower bound");
        if (r == 1 && sample.bar_square < 0) {
            o.require(pair_self_intersection(p, "C") < sample.bar_square + 1, "(iv) C^2 >= Cbar^2 + 1");
        }
    }
    o.require(tested >= 500, "only " + std::to_string(tested) + " admissible samples");
    o.require(kplusb_degree(curve_with_chains("C", -1, {{3}, {3}, {3}}), "C") == 0, "triple A_{3,1}");
    o.detail = o.pass ? std::to_string(tested) + " random admissible pairs satisfy (i)-(iv); triple A_{3,1} gives 0"
                      : o.detail;
    return o;
}

Outcome hj_roundtrip()
{
    Outcome o;
    int types = 0;
    for (std::int64_t n = 2; n <= 50; ++n) {
        for (std::int64_t k = 1; k < n; ++k) {
            if (std::gcd(n, k) != 1) {
                continue;
            }
            const HJType t{n, k};
            const auto chain = type_to_chain(t);
            o.require(chain_to_type(chain) == t, "roundtrip " + type_name(t));
            o.require(abs(oracle::bareiss_det(oracle::chain_matrix(chain))) == n, "determinant " + type_name(t));
            ++types;
        }
    }
    o.detail = o.pass ? std::to_string(types) + " coprime types with n <= 50, determinants +-n" : o.detail;
    return o;
}

Outcome degree_decrease()
{
    Outcome o;
    std::string summary;
    for (int d = 2; d <= 6 && o.pass; ++d) {
        const auto r = fixture("jung-d=" + std::to_string(d));
        const auto seq = factorize(r);
        const auto mu = sarkisov_degrees(r, seq);
        for (std::size_t i = 1; i < mu.size(); ++i) {
            o.require(mu[i] < mu[i - 1], "d=" + std::to_string(d) + ": mu does not decrease at link " + std::to_string(i));
        }
        for (const auto& segment : triangular_segments(index_sequence(seq).indices)) {
            o.require(mu[segment.last] < mu[segment.first], "d=" + std::to_string(d) + ": segment");
        }
        summary += (d > 2 ? "; " : "") + std::string("d=") + std::to_string(d) + " " + to_string(mu.front()) + " -> "
                   + to_string(mu.back());
    }
    o.detail = o.pass ? "mu strictly decreasing along every link: " + summary : o.detail;
    return o;
}

Outcome confluence()
{
    Outcome o;
    int fixtures = 0;
    for (const auto& name : builtin_fixture_names()) {
        const auto failures = confluence_failures(fixture(name));
        o.require(failures == 0, name + ": " + std::to_string(failures) + " keep-sets disagree");
        ++fixtures;
    }
    o.detail = o.pass ? "every contraction order agrees on all keep-sets of " + std::to_string(fixtures) + " fixtures"
                      : o.detail;
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"RAMIFICATION TABLE", ramification_table},
        {"QUADRIC FACTORIZATION", quadric_factorization},
        {"MAXIMAL EXTRACTION", maximal_extraction},
        {"CHAIN REVERSION", chain_reversion},
        {"CONCATENATION", concatenation},
        {"JUNG TOWERS", jung_towers},
        {"ORACLE EQUIVALENCE", oracle_equivalence},
        {"BOUNDARY INEQUALITIES", lemma_remark},
        {"HJ ROUNDTRIP", hj_roundtrip},
        {"DEGREE DECREASE", degree_decrease},
        {"CONFLUENCE", confluence},
    };
    int failed = 0;
    int number = 0;
    for (const auto& c : criteria) {
        ++number;
        Outcome outcome;
        const auto start = std::chrono::steady_clock::now();
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        std::cout << (outcome.pass ? "PASS" : "FAIL") << " " << number << ". " << c.name << ": " << outcome.detail
                  << " (" << ms.count() << " ms)\n";
        failed += outcome.pass ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all acceptance criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
