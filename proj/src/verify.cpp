#include "mullreg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iostream>
#include <numeric>
#include <sstream>
#include <thread>

#include "mullreg/core_quotient.hpp"
#include "mullreg/ladder.hpp"
#include "mullreg/mullineux.hpp"

namespace mullreg {

PairList all_pairs(int b_max) {
    PairList pairs;
    for (int a = 1; a < b_max; ++a)
        for (int b = a + 1; b <= b_max; ++b)
            pairs.emplace_back(a, b);
    return pairs;
}

CaseRecord check_theorem_case(const Partition& p, int a, int b) {
    detail::require_ab(a, b);
    CaseRecord rec;
    rec.partition = p;
    rec.a = a;
    rec.b = b;
    rec.cr_valid = is_cr_valid(p, a, b);
    rec.reg_valid = is_reg_valid(p, a, b);
    rec.divisible_hooks_shallow = !first_divisible_not_shallow(p, a, b).has_value();
    rec.divisible_hooks_shallow_or_steep =
        !first_divisible_not_shallow_or_steep(p, a, b).has_value();
    rec.b_regular = is_b_regular(p, b);

    if (rec.cr_valid && *rec.b_regular) {
        Partition mt = mullineux_transpose(p, b);
        Partition cr = colreg(p, a, b).to_partition();
        rec.mullineux_tr_eq_colreg = (mt == cr);
        if (rec.divisible_hooks_shallow && !*rec.mullineux_tr_eq_colreg)
            rec.witness = "mullineux_tr=" + mt.str() + " colreg=" + cr.str();
    } else if (rec.cr_valid && rec.divisible_hooks_shallow) {
        rec.witness = "not b-regular";
    }

    if (rec.cr_valid && rec.reg_valid) {
        Partition r = reg(p, a, b).to_partition();
        if (is_b_regular(r, b))
            rec.reg_mull_eq_tr_reg =
                (mullineux_transpose(r, b) == colreg(p, a, b).to_partition());
    }
    return rec;
}

namespace {

std::string csv_field(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

struct Acc {
    long long examined = 0;
    long long hypothesis_ok = 0;
    long long inapplicable = 0;
    std::vector<Violation> violations;

    void violate(int n, long long index, const Partition& p, int a, int b, std::string witness) {
        violations.push_back(Violation{n, index, p.str(), a, b, std::move(witness)});
    }
};

struct CaseRef {
    int n = 0;
    int index = 0;
    const Partition* p = nullptr;
    int pair_index = 0;
};

void sort_violations(std::vector<Violation>& v) {
    std::sort(v.begin(), v.end(), [](const Violation& x, const Violation& y) {
        return std::tie(x.n, x.index, x.a, x.b, x.witness) <
               std::tie(y.n, y.index, y.a, y.b, y.witness);
    });
}

// Runs case_fn(case, a, b, acc) over every (partition, pair) with
// |partition| <= n_max. Results are merged deterministically: counters are
// summed and violations sorted by (size, enumeration index, a, b).
template <class Fn>
VerificationReport run_scan(std::string name, int n_max, const PairList& pairs, int jobs,
                            Fn&& case_fn) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.scan = std::move(name);
    rep.n_max = n_max;
    rep.pairs = pairs;

    std::vector<std::vector<Partition>> by_n;
    by_n.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        by_n.push_back(all_partitions(n));

    std::vector<CaseRef> cases;
    for (int n = 0; n <= n_max; ++n)
        for (int idx = 0; idx < static_cast<int>(by_n[n].size()); ++idx)
            for (int pi = 0; pi < static_cast<int>(pairs.size()); ++pi)
                cases.push_back(CaseRef{n, idx, &by_n[n][idx], pi});

    if (jobs < 1)
        jobs = 1;
    jobs = std::min<long long>(jobs, std::max<long long>(1, cases.size()));

    std::vector<Acc> accs(jobs);
    std::atomic<std::size_t> cursor{0};
    constexpr std::size_t kChunk = 64;
    auto work = [&](int w) {
        for (;;) {
            std::size_t begin = cursor.fetch_add(kChunk);
            if (begin >= cases.size())
                return;
            std::size_t end = std::min(begin + kChunk, cases.size());
            for (std::size_t i = begin; i < end; ++i) {
                const CaseRef& c = cases[i];
                case_fn(c, pairs[c.pair_index].first, pairs[c.pair_index].second, accs[w]);
            }
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (int w = 0; w < jobs; ++w)
            threads.emplace_back(work, w);
        for (auto& t : threads)
            t.join();
    }

    for (const Acc& acc : accs) {
        rep.examined += acc.examined;
        rep.hypothesis_ok += acc.hypothesis_ok;
        rep.inapplicable += acc.inapplicable;
        rep.violations.insert(rep.violations.end(), acc.violations.begin(),
                              acc.violations.end());
    }
    sort_violations(rep.violations);
    rep.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    return rep;
}

} // namespace

nlohmann::ordered_json VerificationReport::to_json(bool with_duration) const {
    nlohmann::ordered_json j;
    j["scan"] = scan;
    nlohmann::ordered_json pj = nlohmann::ordered_json::array();
    for (const auto& [a, b] : pairs)
        pj.push_back({a, b});
    j["params"] = {{"n_max", n_max}, {"pairs", pj}};
    j["totals"] = {{"examined", examined},
                   {"hypothesis_ok", hypothesis_ok},
                   {"violations", violations.size()}};
    if (track_inapplicable)
        j["totals"]["inapplicable"] = inapplicable;
    nlohmann::ordered_json vj = nlohmann::ordered_json::array();
    for (const Violation& v : violations)
        vj.push_back({{"partition", v.partition}, {"a", v.a}, {"b", v.b}, {"witness", v.witness}});
    j["violations"] = vj;
    if (with_duration)
        j["duration_ms"] = duration_ms;
    return j;
}

std::string VerificationReport::to_csv() const {
    std::ostringstream out;
    out << "partition,a,b,witness\n";
    for (const Violation& v : violations)
        out << csv_field(v.partition) << ',' << v.a << ',' << v.b << ','
            << csv_field(v.witness) << '\n';
    return out.str();
}

std::string VerificationReport::summary() const {
    std::ostringstream out;
    out << "scan=" << scan << " n_max=" << n_max << " pairs=" << pairs.size()
        << " examined=" << examined << " hypothesis_ok=" << hypothesis_ok;
    if (track_inapplicable)
        out << " inapplicable=" << inapplicable;
    out << " violations=" << violations.size() << " duration_ms=" << duration_ms << '\n';
    for (const Violation& v : violations)
        out << "violation partition=" << v.partition << " a=" << v.a << " b=" << v.b << " "
            << v.witness << '\n';
    return out.str();
}

void require_clean(const VerificationReport& report) {
    if (report.violations.empty())
        return;
    const Violation& v = report.violations.front();
    throw ScanViolation("scan " + report.scan + " found a violation: partition=" + v.partition +
                        " a=" + std::to_string(v.a) + " b=" + std::to_string(v.b) + " " +
                        v.witness);
}

VerificationReport scan_theorem(int n_max, const PairList& pairs, int jobs) {
    for (const auto& [a, b] : pairs)
        detail::require_ab(a, b);
    return run_scan("theorem", n_max, pairs, jobs,
                    [](const CaseRef& c, int a, int b, Acc& acc) {
                        ++acc.examined;
                        CaseRecord rec = check_theorem_case(*c.p, a, b);
                        if (!(rec.cr_valid && rec.divisible_hooks_shallow))
                            return;
                        ++acc.hypothesis_ok;
                        bool ok = rec.b_regular.value_or(false) &&
                                  rec.mullineux_tr_eq_colreg.value_or(false);
                        if (!ok)
                            acc.violate(c.n, c.index, *c.p, a, b, rec.witness);
                    });
}

VerificationReport scan_conjecture_reverse(int n_max, const PairList& pairs, int jobs,
                                           bool allow_non_coprime) {
    for (const auto& [a, b] : pairs) {
        detail::require_ab(a, b);
        if (!allow_non_coprime && std::gcd(a, b) != 1)
            throw BadParameters("pair (" + std::to_string(a) + "," + std::to_string(b) +
                                ") is not coprime");
    }
    return run_scan("conjecture-reverse", n_max, pairs, jobs,
                    [](const CaseRef& c, int a, int b, Acc& acc) {
                        ++acc.examined;
                        const Partition& p = *c.p;
                        if (!is_b_regular(p, b) || !is_cr_valid(p, a, b))
                            return;
                        if (mullineux_transpose(p, b) != colreg(p, a, b).to_partition())
                            return;
                        ++acc.hypothesis_ok;
                        if (auto box = first_divisible_not_shallow(p, a, b)) {
                            HookStats h = hook_stats(p, *box);
                            acc.violate(c.n, c.index, p, a, b,
                                        "hook=(" + std::to_string(box->row) + "," +
                                            std::to_string(box->col) + ") arm=" +
                                            std::to_string(h.arm) + " leg=" +
                                            std::to_string(h.leg) + " not shallow");
                        }
                    });
}

VerificationReport scan_conjecture_fayers(int n_max, const PairList& pairs, int jobs) {
    for (const auto& [a, b] : pairs) {
        detail::require_ab(a, b);
        if (2 * a >= b)
            throw BadParameters("pair (" + std::to_string(a) + "," + std::to_string(b) +
                                ") does not satisfy 2a < b");
    }
    VerificationReport rep = run_scan(
        "conjecture-fayers", n_max, pairs, jobs, [](const CaseRef& c, int a, int b, Acc& acc) {
            ++acc.examined;
            const Partition& p = *c.p;
            if (!is_cr_valid(p, a, b) || !is_reg_valid(p, a, b))
                return;
            ++acc.hypothesis_ok;
            Partition r = reg(p, a, b).to_partition();
            if (!is_b_regular(r, b)) {
                // Regularized output should always be b-regular; record the
                // alarm instead of applying the Mullineux map to it.
                ++acc.inapplicable;
                std::cerr << "alarm: reg(" << p.str() << "," << a << "," << b
                          << ") = " << r.str() << " is not b-regular\n";
                return;
            }
            bool identity = mullineux_transpose(r, b) == colreg(p, a, b).to_partition();
            bool cond = !first_divisible_not_shallow_or_steep(p, a, b).has_value();
            if (cond && !identity)
                acc.violate(c.n, c.index, p, a, b,
                            "direction=i reg_mullineux_tr=" + mullineux_transpose(r, b).str() +
                                " colreg=" + colreg(p, a, b).to_partition().str());
            if (std::gcd(a, b) == 1 && identity && !cond) {
                Box box = *first_divisible_not_shallow_or_steep(p, a, b);
                acc.violate(c.n, c.index, p, a, b,
                            "direction=ii hook=(" + std::to_string(box.row) + "," +
                                std::to_string(box.col) + ") neither shallow nor steep");
            }
        });
    rep.track_inapplicable = true;
    return rep;
}

VerificationReport brute_force_cross_checks(int n_max, int b_max) {
    detail::require_modulus(b_max);
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.scan = "selftest";
    rep.n_max = n_max;
    rep.pairs = all_pairs(b_max);
    rep.track_inapplicable = false;

    auto fail = [&](int n, long long idx, const Partition& p, int a, int b, std::string w) {
        rep.violations.push_back(Violation{n, idx, p.str(), a, b, std::move(w)});
    };

    // Pinned single case.
    ++rep.examined;
    if (remove_truncated_b_rim(Partition({7, 5, 1, 1}), 3) != Partition({5, 3, 1}))
        fail(14, 0, Partition({7, 5, 1, 1}), 0, 3, "check=pinned truncated-rim step");

    for (int n = 0; n <= n_max; ++n) {
        std::vector<Partition> ps = all_partitions(n);

        for (int idx = 0; idx < static_cast<int>(ps.size()); ++idx) {
            const Partition& p = ps[idx];

            for (int b = 2; b <= b_max; ++b) {
                ++rep.examined;
                Partition core_abacus = core_b(p, b);
                if (core_abacus != core_b_by_ribbons(p, b))
                    fail(n, idx, p, 0, b, "check=core dual paths disagree");
                QuotientTuple q = quotient_b(p, b);
                if (q != quotient_b_by_hooks(p, b))
                    fail(n, idx, p, 0, b, "check=quotient dual paths disagree");
                if (p.size() != core_abacus.size() + b * q.total_size())
                    fail(n, idx, p, 0, b, "check=size identity");

                if (is_b_regular(p, b)) {
                    Partition m = mullineux(p, b);
                    if (!is_b_regular(m, b))
                        fail(n, idx, p, 0, b, "check=mullineux output not b-regular");
                    else if (mullineux(m, b) != p)
                        fail(n, idx, p, 0, b, "check=mullineux involution");
                    // The composition with transposition fixes the core, so
                    // the map alone transposes it.
                    if (core_b(mullineux_transpose(p, b), b) != core_abacus)
                        fail(n, idx, p, 0, b, "check=core preservation under mullineux transpose");
                    if (core_b(m, b) != core_abacus.transposed())
                        fail(n, idx, p, 0, b, "check=core transposition under mullineux");
                    if (!p.empty()) {
                        Partition j = remove_truncated_b_rim(p, b);
                        try {
                            Partition rhs = concat(Partition({p.size() - j.size()}),
                                                   mullineux_transpose(j, b));
                            if (mullineux_transpose(p, b) != rhs)
                                fail(n, idx, p, 0, b, "check=mullineux recursion");
                        } catch (const NotAPartition&) {
                            fail(n, idx, p, 0, b, "check=mullineux recursion concat");
                        }
                    }
                }
            }

            for (const auto& pair : rep.pairs) {
                const int a = pair.first, b = pair.second;
                ++rep.examined;
                bool valid = is_cr_valid(p, a, b);
                if (valid != is_cr_valid_lemma(p, a, b))
                    fail(n, idx, p, a, b, "check=validity lemma equivalence");

                for_each_hook(p, [&](Box box, int arm, int leg) {
                    if ((arm + leg + 1) % b != 0)
                        return;
                    bool shallow = (b - a) * leg < a * (arm + 1);
                    bool steep = (b - a) * arm < a * (leg + 1);
                    if (shallow && steep && b >= 2 * a)
                        fail(n, idx, p, a, b,
                             "check=shallow and steep with b >= 2a at (" +
                                 std::to_string(box.row) + "," + std::to_string(box.col) + ")");
                });

                if (valid) {
                    Partition cr = colreg(p, a, b).to_partition();
                    if (core_b(cr, b) != core_b(p, b))
                        fail(n, idx, p, a, b, "check=core preservation under colreg");
                    if (b_weight(cr, b) != b_weight(p, b))
                        fail(n, idx, p, a, b, "check=weight preservation under colreg");

                    // Row-by-row rebuild of the column regularization. The
                    // step is undefined on some inputs with critical hooks;
                    // such chains are skipped, anything else must rebuild.
                    std::vector<int> sizes;
                    Partition cur = p;
                    bool defined = true;
                    while (!cur.empty()) {
                        Partition next;
                        try {
                            next = semireg(cur, a, b);
                        } catch (const NotAPartition&) {
                            if (!first_critical_hook(cur, a, b))
                                fail(n, idx, p, a, b,
                                     "check=semireg undefined without a critical hook");
                            defined = false;
                            break;
                        }
                        if (next.size() >= cur.size()) {
                            fail(n, idx, p, a, b, "check=semireg did not shrink");
                            defined = false;
                            break;
                        }
                        sizes.push_back(cur.size() - next.size());
                        cur = std::move(next);
                    }
                    if (defined && cur.empty() && sizes != cr.parts())
                        fail(n, idx, p, a, b, "check=colreg recursion");

                    if (is_b_regular(p, b) && !first_critical_hook(p, a, b)) {
                        RectStats s = omega_psi(p, a, b);
                        Partition expected =
                            s.psi == 0 ? p.sub(2, p.length())
                                       : concat(remove_truncated_b_rim(p.sub(1, s.psi), b),
                                                p.sub(s.psi + 2, p.length()));
                        if (semireg(p, a, b) != expected)
                            fail(n, idx, p, a, b, "check=row-removal identity");
                    }
                }

                if (is_reg_valid(p, a, b)) {
                    Partition r = reg(p, a, b).to_partition();
                    if (core_b(r, b) != core_b(p, b))
                        fail(n, idx, p, a, b, "check=core preservation under reg");
                    if (b_weight(r, b) != b_weight(p, b))
                        fail(n, idx, p, a, b, "check=weight preservation under reg");
                }
            }
        }

        // Dominance reversal over same-size pairs.
        for (int i = 0; i < static_cast<int>(ps.size()); ++i) {
            Partition ti = ps[i].transposed();
            for (int k = 0; k < static_cast<int>(ps.size()); ++k) {
                ++rep.examined;
                if (dominance_leq(ps[i], ps[k]) != dominance_leq(ps[k].transposed(), ti))
                    fail(n, i, ps[i], 0, 0, "check=dominance reversal against " + ps[k].str());
            }
        }
    }

    rep.hypothesis_ok = rep.examined - static_cast<long long>(rep.violations.size());
    sort_violations(rep.violations);
    rep.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    return rep;
}

} // namespace mullreg
