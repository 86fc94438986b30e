// Command-line front end: enumeration, transformation, theorem verification
// batteries, generating-function evaluation, and binomial identity tables.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage/domain error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rqa/genmm.hpp"
#include "rqa/json_io.hpp"
#include "rqa/rq_ideal.hpp"
#include "rqa/rq_linalg.hpp"
#include "rqa/sequences.hpp"

using namespace rqa;

namespace {

std::vector<long> parse_long_list(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
    return out;
}

struct CheckResult {
    std::string name;
    bool pass = false;
    std::vector<DegreeReport> degrees;
    double wall_ms = 0.0;
};

struct RunReport {
    std::string command;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void add_check(RunReport& report, std::string name, const MembershipReport& mr, double ms) {
    CheckResult c;
    c.name = std::move(name);
    c.pass = mr.contained;
    c.degrees = mr.degrees;
    c.wall_ms = ms;
    report.checks.push_back(std::move(c));
}

// all nonnegative integer vectors of length parts summing to total
void for_each_type_vector(int parts, long total, const std::function<void(const std::vector<long>&)>& f) {
    std::vector<long> cur(parts, 0);
    std::function<void(int, long)> rec = [&](int pos, long rem) {
        if (pos == parts - 1) {
            cur[pos] = rem;
            f(cur);
            return;
        }
        for (long t = 0; t <= rem; ++t) {
            cur[pos] = t;
            rec(pos + 1, rem - t);
        }
    };
    if (parts > 0) rec(0, total);
}

std::vector<Permutation> sigma_sample(int m) {
    // identity, the rotation (2,...,m,1) and the reversal, deduplicated
    std::vector<Permutation> out{Permutation::identity(m)};
    std::vector<int> rot(m), rev(m);
    for (int t = 0; t < m; ++t) {
        rot[t] = t + 2 <= m ? t + 2 : 1;
        rev[t] = m - t;
    }
    for (const Permutation& s : {Permutation(rot), Permutation(rev)})
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    return out;
}

std::string type_str(const std::vector<long>& v) {
    std::string s = "(";
    for (std::size_t t = 0; t < v.size(); ++t) s += (t ? "," : "") + std::to_string(v[t]);
    return s + ")";
}

void battery_main1(RunReport& report, int m, int max_total, RelationSet rs_part1,
                   RelationSet rs_part2) {
    for (long n = 1; n <= max_total; ++n) {
        for_each_type_vector(m, n, [&](const std::vector<long>& p) {
            for_each_type_vector(m, n, [&](const std::vector<long>& r) {
                for (const Permutation& pi : Permutation::all(m)) {
                    for (const Permutation& sigma : sigma_sample(m)) {
                        Timer t;
                        bool ok = verify_main1(m, p, r, pi, sigma, Main1Variant::Part1, rs_part1);
                        CheckResult c;
                        c.name = "main1.1 m=" + std::to_string(m) + " p=" + type_str(p) +
                                 " r=" + type_str(r) + " pi=" + pi.str() +
                                 " sigma=" + sigma.str();
                        c.pass = ok;
                        c.wall_ms = t.ms();
                        report.checks.push_back(std::move(c));

                        bool p_small = true;
                        for (long x : p) p_small = p_small && x <= 1;
                        if (p_small && n <= std::min<long>(max_total, m)) {
                            Timer t2;
                            bool ok2 =
                                verify_main1(m, p, r, pi, sigma, Main1Variant::Part2, rs_part2);
                            CheckResult c2;
                            c2.name = "main1.2 m=" + std::to_string(m) + " p=" + type_str(p) +
                                      " r=" + type_str(r) + " pi=" + pi.str() +
                                      " sigma=" + sigma.str();
                            c2.pass = ok2;
                            c2.wall_ms = t2.ms();
                            report.checks.push_back(std::move(c2));
                        }
                    }
                }
            });
        });
    }
}

void battery_matinv(RunReport& report, int m, int degree, RelationSet rs) {
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            Timer t;
            MembershipReport mr = verify_matrix_inverse_report(m, i, j, degree, rs);
            add_check(report,
                      "matinv m=" + std::to_string(m) + " i=" + std::to_string(i) +
                          " j=" + std::to_string(j) + " deg<=" + std::to_string(degree),
                      mr, t.ms());
        }
}

void battery_prop_jacobi1(RunReport& report, int m, int degree, RelationSet rs) {
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            for (int k = 1; k <= m; ++k)
                for (int l = k + 1; l <= m; ++l) {
                    Timer t;
                    MembershipReport mr =
                        verify_prop_inverse_relations_report(m, i, j, k, l, degree, rs);
                    add_check(report,
                              "prop-jacobi1 m=" + std::to_string(m) + " (i,j,k,l)=(" +
                                  std::to_string(i) + "," + std::to_string(j) + "," +
                                  std::to_string(k) + "," + std::to_string(l) + ") deg<=" +
                                  std::to_string(degree),
                              mr, t.ms());
                }
}

void subsets_of_size(int m, int k, std::vector<int>& cur, int next,
                     const std::function<void(const std::vector<int>&)>& f) {
    if (static_cast<int>(cur.size()) == k) {
        f(cur);
        return;
    }
    for (int t = next; t <= m; ++t) {
        cur.push_back(t);
        subsets_of_size(m, k, cur, t + 1, f);
        cur.pop_back();
    }
}

std::string set_str(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t t = 0; t < v.size(); ++t) s += (t ? "," : "") + std::to_string(v[t]);
    return s + "}";
}

void battery_jacobi(RunReport& report, int m, int degree, RelationSet rs) {
    for (int k = 1; k <= std::min(m, 2); ++k) {
        std::vector<int> I, J;
        subsets_of_size(m, k, I, 1, [&](const std::vector<int>& si) {
            subsets_of_size(m, k, J, 1, [&](const std::vector<int>& sj) {
                Timer t;
                MembershipReport mr = verify_jacobi_report(m, si, sj, degree, rs);
                add_check(report,
                          "jacobi m=" + std::to_string(m) + " I=" + set_str(si) +
                              " J=" + set_str(sj) + " deg<=" + std::to_string(degree),
                          mr, t.ms());
            });
        });
    }
    // full index sets: det of the whole inverse
    std::vector<int> full(m);
    for (int t = 0; t < m; ++t) full[t] = t + 1;
    Timer t;
    MembershipReport mr = verify_jacobi_report(m, full, full, degree, rs);
    add_check(report,
              "jacobi m=" + std::to_string(m) + " I=J=" + set_str(full) + " deg<=" +
                  std::to_string(degree),
              mr, t.ms());
}

int emit_report(const RunReport& report, bool as_json, bool timings) {
    if (as_json) {
        Json j;
        j["command"] = report.command;
        Json checks = Json::array();
        for (const CheckResult& c : report.checks) {
            Json jc;
            jc["name"] = c.name;
            jc["pass"] = c.pass;
            if (!c.degrees.empty()) {
                Json degs = Json::array();
                for (const DegreeReport& d : c.degrees) {
                    Json jd;
                    jd["degree"] = d.degree;
                    jd["ideal_dim"] = d.ideal_dim;
                    jd["residue_terms"] = d.component_terms;
                    jd["in_ideal"] = d.in_ideal;
                    degs.push_back(std::move(jd));
                }
                jc["residue_degrees"] = std::move(degs);
            }
            if (timings) jc["wall_ms"] = c.wall_ms;
            checks.push_back(std::move(jc));
        }
        j["checks"] = std::move(checks);
        j["all_pass"] = report.all_pass();
        j["total"] = report.checks.size();
        std::cout << j.dump(2) << "\n";
    } else {
        std::size_t passed = 0;
        for (const CheckResult& c : report.checks) {
            std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name;
            if (timings) {
                std::ostringstream os;
                os.setf(std::ios::fixed);
                os.precision(1);
                os << c.wall_ms;
                std::cout << "  (" << os.str() << " ms)";
            }
            std::cout << "\n";
            if (c.pass) ++passed;
        }
        std::cout << passed << "/" << report.checks.size() << " checks passed\n";
    }
    return report.all_pass() ? 0 : 1;
}

int cmd_enumerate(const std::string& cls, const std::string& p_str, const std::string& r_str,
                  const std::string& pi_str, bool count_only, bool as_json) {
    SequenceClassQuery q;
    q.p = parse_long_list(p_str);
    q.r = r_str.empty() ? q.p : parse_long_list(r_str);
    q.pi = pi_str.empty() ? Permutation::identity(static_cast<int>(q.p.size()))
                          : Permutation::from_string(pi_str);
    q.cls = sequence_class_from_string(cls);
    if (count_only) {
        std::cout << class_cardinality(q).get_str() << "\n";
        return 0;
    }
    std::vector<Word> words = enumerate_class(q);
    if (as_json) {
        Json j;
        j["query"] = query_to_json(q);
        Json arr = Json::array();
        for (const Word& w : words) arr.push_back(word_to_json(w));
        j["words"] = std::move(arr);
        j["count"] = words.size();
        std::cout << j.dump(2) << "\n";
    } else {
        for (const Word& w : words) std::cout << to_string(w) << "\n";
        std::cout << "count " << words.size() << "\n";
    }
    return 0;
}

int cmd_transform(const std::string& word_str, const std::string& sigma_str, bool steps,
                  bool inverse, bool as_json) {
    Word w = parse_word(word_str);
    Permutation sigma = Permutation::from_string(sigma_str);
    Permutation id = Permutation::identity(sigma.size());
    if (inverse) {
        Word out = phi_inverse(w, sigma);
        std::cout << to_string(out) << "\n";
        return 0;
    }
    std::vector<Word> trace;
    Word out = phi(w, sigma, &trace);
    if (as_json) {
        Json j;
        j["input"] = word_to_json(w);
        j["sigma"] = sigma.images();
        j["result"] = word_to_json(out);
        if (steps) {
            Json arr = Json::array();
            for (const Word& t : trace) {
                Json jt;
                jt["word"] = word_to_json(t);
                jt["rank"] = rank(t, id);
                arr.push_back(std::move(jt));
            }
            j["trace"] = std::move(arr);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        if (steps)
            for (const Word& t : trace)
                std::cout << to_string(t) << "  rank " << rank(t, id) << "\n";
        std::cout << to_string(out) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, int m, int degree, const std::string& relations,
               bool as_json, bool timings) {
    if (suite != "main1" && suite != "matinv" && suite != "prop-jacobi1" &&
        suite != "jacobi" && suite != "all")
        throw std::domain_error("unknown suite: " + suite);
    if (m < 1 || degree < 0) throw std::domain_error("verify: need m >= 1 and degree >= 0");
    RelationSet rs = relation_set_from_string(relations);
    RunReport report;
    report.command = "verify " + suite + " --m " + std::to_string(m) + " --degree " +
                     std::to_string(degree) + " --relations " + to_string(rs);
    bool rs_forced = rs != RelationSet::RightQuantum;
    RelationSet rs_part2 = rs_forced ? rs : RelationSet::CrossOnly;
    if (suite == "main1" || suite == "all")
        battery_main1(report, m, std::min(degree, 4), rs, rs_part2);
    if (suite == "matinv" || suite == "all") battery_matinv(report, m, degree, rs);
    if (suite == "prop-jacobi1" || suite == "all") battery_prop_jacobi1(report, m, degree, rs);
    if (suite == "jacobi" || suite == "all") battery_jacobi(report, m, degree, rs);
    return emit_report(report, as_json, timings);
}

int cmd_genmm(const std::string& matrix_file, const std::string& d_str, int series_degree,
              const std::vector<std::string>& coeffs, bool as_json) {
    std::ifstream in(matrix_file);
    if (!in) throw std::domain_error("cannot open matrix file: " + matrix_file);
    Json jm = Json::parse(in);
    ScalarMatrix A = matrix_from_json(jm);
    std::vector<long> d = parse_long_list(d_str);
    MasterFormula F = eval_F(A, d);

    bool all_ok = true;
    Json jout;
    jout["formula"] = master_formula_to_json(F);

    if (!as_json) {
        std::cout << "F = " << (F.prefactor_sign < 0 ? "-" : "") << "(1/D) * [";
        for (std::size_t t = 0; t < F.terms.size(); ++t) {
            if (t) std::cout << " + ";
            if (F.terms[t].factors.empty()) std::cout << "1";
            for (std::size_t f = 0; f < F.terms[t].factors.size(); ++f) {
                const MinorRatioFactor& fac = F.terms[t].factors[f];
                if (f) std::cout << " * ";
                std::cout << (fac.sign < 0 ? "-" : "") << minor_name(fac.num) << "/"
                          << minor_name(fac.den);
            }
        }
        if (F.terms.empty()) std::cout << "1";
        std::cout << "]\n";
        for (const auto& [key, poly] : F.minors)
            std::cout << minor_name(key) << " = " << poly.str() << "\n";
    }

    if (series_degree >= 0) {
        CommPoly via_formula = F.series(series_degree);
        CommPoly via_brute = eval_F_series(A, d, series_degree);
        bool ok = via_formula == via_brute;
        all_ok = all_ok && ok;
        jout["series_degree"] = series_degree;
        jout["series_cross_check"] = ok ? "ok" : "mismatch";
        if (!as_json)
            std::cout << "series cross-check through total degree " << series_degree << ": "
                      << (ok ? "ok" : "MISMATCH") << "\n";
    }

    Json jcoeffs = Json::array();
    for (const std::string& c : coeffs) {
        std::vector<long> e = parse_long_list(c);
        Monomial mono(e.size());
        for (std::size_t t = 0; t < e.size(); ++t) mono[t] = static_cast<unsigned>(e[t]);
        Rational via_formula = F.series_coefficient(mono);
        std::vector<long> r(e.size());
        bool valid = true;
        for (std::size_t t = 0; t < e.size(); ++t) {
            r[t] = e[t] - d[t];
            if (r[t] < 0) valid = false;
        }
        Rational via_g = valid ? coefficient_G(A, e, r) : Rational(0);
        bool ok = via_formula == via_g;
        all_ok = all_ok && ok;
        Json jc;
        jc["exponents"] = e;
        jc["value"] = via_formula.get_str();
        jc["cross_check"] = ok ? "ok" : "mismatch";
        jcoeffs.push_back(std::move(jc));
        if (!as_json)
            std::cout << "coeff x^" << type_str(e) << " = " << via_formula.get_str()
                      << (ok ? " (cross-check ok)" : " (MISMATCH)") << "\n";
    }
    if (!coeffs.empty()) jout["coefficients"] = std::move(jcoeffs);
    if (as_json) std::cout << jout.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

int cmd_dixon(long n, long k, bool as_json) {
    if (k < 0) {
        DixonS s = dixon_S(n);
        if (as_json) {
            Json j;
            j["n"] = n;
            j["brute"] = s.brute.get_str();
            j["closed"] = s.closed.get_str();
            j["match"] = s.match;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "S(" << n << "): brute " << s.brute.get_str() << "  closed form "
                      << s.closed.get_str() << "  match " << (s.match ? "yes" : "NO") << "\n";
        }
        return s.match ? 0 : 1;
    }
    DixonSk s = dixon_Sk(n, k);
    if (as_json) {
        Json j;
        j["n"] = n;
        j["k"] = k;
        j["brute"] = s.brute.get_str();
        j["factorial_form"] = s.factorial_form.get_str();
        j["double_sum"] = s.double_sum.get_str();
        j["match"] = s.match;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "S_" << k << "(" << n << "): brute " << s.brute.get_str()
                  << "  factorial form " << s.factorial_form.get_str() << "  double sum "
                  << s.double_sum.get_str() << "  match " << (s.match ? "yes" : "NO") << "\n";
    }
    return s.match ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact word combinatorics and right-quantum determinant identities"};
    app.require_subcommand(1);

    // enumerate
    std::string en_class = "ordered", en_p, en_r, en_pi;
    bool en_count = false, en_json = false;
    CLI::App* en = app.add_subcommand("enumerate", "enumerate a sequence class");
    en->add_option("--class", en_class, "ordered|back_ordered|path|back_path");
    en->add_option("--p", en_p, "starting-height counts, e.g. 2,1,1")->required();
    en->add_option("--r", en_r, "ending-height counts (defaults to p)");
    en->add_option("--pi", en_pi, "permutation in one-line notation, e.g. 231");
    en->add_flag("--count-only", en_count, "print only the cardinality");
    en->add_flag("--json", en_json, "JSON output");

    // transform
    std::string tr_word, tr_sigma;
    bool tr_steps = false, tr_inverse = false, tr_json = false;
    CLI::App* tr = app.add_subcommand("transform", "apply the path transformation");
    tr->add_option("--word", tr_word, "word, e.g. a[1,2]a[2,1]")->required();
    tr->add_option("--sigma", tr_sigma, "permutation in one-line notation")->required();
    tr->add_flag("--steps", tr_steps, "print every switch with its rank");
    tr->add_flag("--inverse", tr_inverse, "apply the inverse transformation");
    tr->add_flag("--json", tr_json, "JSON output");

    // verify
    std::string ve_suite, ve_relations = "right_quantum";
    int ve_m = 2, ve_degree = 3;
    bool ve_json = false, ve_timings = false;
    CLI::App* ve = app.add_subcommand("verify", "run identity verification batteries");
    ve->add_option("suite", ve_suite, "main1|matinv|jacobi|prop-jacobi1|all")->required();
    ve->add_option("--m", ve_m, "matrix dimension");
    ve->add_option("--degree", ve_degree, "maximum homogeneous degree");
    ve->add_option("--relations", ve_relations, "right_quantum|cross|free");
    ve->add_flag("--json", ve_json, "JSON report");
    ve->add_flag("--timings", ve_timings, "include wall-clock times");

    // genmm
    std::string gm_matrix, gm_d;
    int gm_series_degree = -1;
    std::vector<std::string> gm_coeffs;
    bool gm_json = false;
    CLI::App* gm = app.add_subcommand("genmm", "evaluate the master generating function");
    gm->add_option("--matrix", gm_matrix, "JSON file {m, entries}")->required();
    gm->add_option("--d", gm_d, "integer vector with zero sum, e.g. 1,-2,2,-1")->required();
    gm->add_option("--series-degree", gm_series_degree, "cross-check through this total degree");
    gm->add_option("--coeff", gm_coeffs, "exponent vector(s) to extract, e.g. 1,0,2,0");
    gm->add_flag("--json", gm_json, "JSON output");

    // dixon
    long dx_n = 0, dx_k = -1;
    bool dx_json = false;
    CLI::App* dx = app.add_subcommand("dixon", "alternating binomial triple sums");
    dx->add_option("--n", dx_n, "upper parameter")->required();
    dx->add_option("--k", dx_k, "offset parameter (omit for the basic sum)");
    dx->add_flag("--json", dx_json, "JSON output");

    try {
        app.parse(argc, argv);
        if (*en) return cmd_enumerate(en_class, en_p, en_r, en_pi, en_count, en_json);
        if (*tr) return cmd_transform(tr_word, tr_sigma, tr_steps, tr_inverse, tr_json);
        if (*ve) return cmd_verify(ve_suite, ve_m, ve_degree, ve_relations, ve_json, ve_timings);
        if (*gm) return cmd_genmm(gm_matrix, gm_d, gm_series_degree, gm_coeffs, gm_json);
        if (*dx) return cmd_dixon(dx_n, dx_k, dx_json);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
