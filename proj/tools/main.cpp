// cliffdef: analyze numerical semigroups, evaluate the closed-form families,
// verify closed forms against the exhaustive profile, and emit code-bound
// reports and staircase plots.

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliffdef/ag_codes.hpp"
#include "cliffdef/analysis.hpp"
#include "cliffdef/clifford.hpp"
#include "cliffdef/families.hpp"
#include "cliffdef/semigroup.hpp"

using json = nlohmann::ordered_json;
using cliffdef::HalfInt;
using cliffdef::NumericalSemigroup;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRejected = 2;  // NotNumerical, UnsupportedParameters
constexpr int kExitMismatch = 3;  // closed form disagrees with the oracle

struct GlobalOpts {
    std::string format = "json";  // json | table
    std::int64_t conductor_cap = cliffdef::kDefaultConductorCap;
};

// A parameter range: explicit values, "lo..hi", or "1..m-1" (h tracks m).
struct RangeSpec {
    std::vector<std::int64_t> values;
    bool follows_m = false;  // 1..m-1

    static RangeSpec parse(const std::string& text) {
        RangeSpec spec;
        auto dots = text.find("..");
        if (dots != std::string::npos) {
            std::string lo_s = text.substr(0, dots);
            std::string hi_s = text.substr(dots + 2);
            std::int64_t lo = std::stoll(lo_s);
            if (hi_s == "m-1") {
                if (lo != 1) throw CLI::ValidationError("range", "expected 1..m-1");
                spec.follows_m = true;
                return spec;
            }
            std::int64_t hi = std::stoll(hi_s);
            for (std::int64_t v = lo; v <= hi; ++v) spec.values.push_back(v);
            return spec;
        }
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) spec.values.push_back(std::stoll(tok));
        if (spec.values.empty()) throw CLI::ValidationError("range", "empty range");
        return spec;
    }
};

std::vector<std::int64_t> parse_generators(const std::vector<std::string>& args) {
    std::vector<std::int64_t> gens;
    for (const auto& a : args) {
        std::size_t pos = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(a, &pos);
        } catch (const std::exception&) {
            throw CLI::ValidationError("generators", "not an integer: " + a);
        }
        if (pos != a.size() || v <= 0)
            throw CLI::ValidationError("generators", "not a positive integer: " + a);
        gens.push_back(v);
    }
    return gens;
}

std::string join_ints(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

void print_analysis_table(const cliffdef::AnalysisReport& r, std::ostream& out) {
    out << "generators        " << join_ints(r.generators) << "\n"
        << "genus             " << r.genus << "\n"
        << "frobenius         " << r.frobenius << "\n"
        << "conductor         " << r.conductor << "\n"
        << "multiplicity      " << r.multiplicity << "\n"
        << "apery set         " << join_ints(r.apery_set) << "\n"
        << "symmetric         " << (r.symmetric ? "yes" : "no") << "\n"
        << "sparse            " << (r.sparse ? "yes" : "no") << "\n"
        << "max emb. dim.     " << (r.max_embedding_dimension ? "yes" : "no") << "\n"
        << "restricted defect " << r.restricted_defect.str() << " at "
        << join_ints(r.restricted_argmax) << "\n"
        << "duursma defect    " << r.duursma_defect.str() << "\n"
        << "delta max         " << r.delta_max << " at " << join_ints(r.delta_argmax) << "\n";
}

// ---------------------------------------------------------------------------
// family / sweep plumbing

struct FamilyParams {
    std::int64_t m = 0, h = 0, q = 0, q0 = 0, t = 0, r = 0, g = 0;
};

cliffdef::FamilyResult build_family(cliffdef::Family f, const FamilyParams& p, std::int64_t cap) {
    switch (f) {
        case cliffdef::Family::Interval: return cliffdef::interval(p.m, p.h, cap);
        case cliffdef::Family::Klein: return cliffdef::klein(p.m, cap);
        case cliffdef::Family::HermitianQuotient: return cliffdef::hermitian_quotient(p.m, p.q, cap);
        case cliffdef::Family::PedersenSorensen: return cliffdef::pedersen_sorensen(p.q0, p.t, cap);
        case cliffdef::Family::Suzuki: return cliffdef::suzuki(p.q0, cap);
        case cliffdef::Family::NormTrace: return cliffdef::norm_trace(p.q, p.r, cap);
        case cliffdef::Family::Hyperelliptic: return cliffdef::hyperelliptic(p.g, cap);
    }
    throw CLI::ValidationError("family", "unknown family");
}

std::string params_string(const cliffdef::FamilyResult& fr) {
    std::string s;
    for (const auto& [k, v] : fr.params) {
        if (!s.empty()) s += " ";
        s += k + "=" + std::to_string(v);
    }
    return s;
}

enum class VerifyStatus { Ok, Mismatch, Skipped };

// Compare closed form against the exhaustive profile of the materialized
// semigroup. The closed argmax must lie in the full argmax set; the closed
// defect, when present, must equal the maximum exactly.
VerifyStatus verify_family(const cliffdef::FamilyResult& fr, bool corrupt, std::string& detail) {
    if (!fr.semigroup) {
        detail = "conductor " + std::to_string(fr.conductor_formula) + " exceeds cap";
        return VerifyStatus::Skipped;
    }
    const NumericalSemigroup& s = *fr.semigroup;
    std::int64_t argmax = fr.argmax_closed_form + (corrupt ? 1 : 0);
    std::optional<HalfInt> defect = fr.defect_closed_form;
    if (defect && corrupt) defect = HalfInt::from_twice(defect->twice + 1);

    if (fr.genus_formula != s.genus()) {
        detail = "genus formula " + std::to_string(fr.genus_formula) + " != sieved " +
                 std::to_string(s.genus());
        return VerifyStatus::Mismatch;
    }
    cliffdef::CliffordProfile prof = cliffdef::profile(s, cliffdef::DomainKind::RestrictedToS);
    bool in_argmax = false;
    for (std::int64_t a : prof.argmax)
        if (a == argmax) in_argmax = true;
    if (!in_argmax) {
        detail = "argmax " + std::to_string(argmax) + " not in oracle set {" +
                 join_ints(prof.argmax) + "}";
        return VerifyStatus::Mismatch;
    }
    if (defect && *defect != prof.max_value) {
        detail = "defect " + defect->str() + " != oracle " + prof.max_value.str();
        return VerifyStatus::Mismatch;
    }
    detail = "ok";
    return VerifyStatus::Ok;
}

json family_json(const cliffdef::FamilyResult& fr) {
    json j;
    j["family"] = cliffdef::family_name(fr.family);
    json p;
    for (const auto& [k, v] : fr.params) p[k] = v;
    j["params"] = p;
    j["genus"] = fr.genus_formula;
    j["conductor"] = fr.conductor_formula;
    j["argmax"] = fr.argmax_closed_form;
    j["defect"] = fr.defect_closed_form ? json(cliffdef::to_json(*fr.defect_closed_form))
                                        : json(nullptr);
    j["materialized"] = fr.semigroup.has_value();
    return j;
}

// ---------------------------------------------------------------------------
// plot emitters

void emit_csv(const NumericalSemigroup& s, std::ostream& out) {
    cliffdef::CliffordProfile prof = cliffdef::profile(s, cliffdef::DomainKind::RestrictedToS);
    auto is_argmax = [&](std::int64_t x) {
        for (std::int64_t a : prof.argmax)
            if (a == x) return true;
        return false;
    };
    out << "x,in_S,sigma_times_2,is_argmax\r\n";
    for (std::int64_t x = 0; x <= s.conductor(); ++x) {
        out << x << "," << (s.contains(x) ? 1 : 0) << "," << cliffdef::sigma(s, x).twice << ","
            << (is_argmax(x) ? 1 : 0) << "\r\n";
    }
}

void emit_svg(const NumericalSemigroup& s, std::ostream& out) {
    cliffdef::CliffordProfile prof = cliffdef::profile(s, cliffdef::DomainKind::RestrictedToS);
    auto is_argmax = [&](std::int64_t x) {
        for (std::int64_t a : prof.argmax)
            if (a == x) return true;
        return false;
    };
    std::int64_t c = s.conductor();
    std::int64_t max2 = 0, min2 = 0;
    for (std::int64_t x = 0; x <= c; ++x) {
        std::int64_t v = cliffdef::sigma(s, x).twice;
        max2 = std::max(max2, v);
        min2 = std::min(min2, v);
    }
    const double w = 720.0, hgt = 360.0, pad = 32.0;
    auto px = [&](std::int64_t x) { return pad + (c == 0 ? 0.0 : (w - 2 * pad) * x / double(c)); };
    auto py = [&](std::int64_t v2) {
        std::int64_t span = std::max<std::int64_t>(1, max2 - min2);
        return hgt - pad - (hgt - 2 * pad) * (v2 - min2) / double(span);
    };
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<!-- generator: cliffdef-plot 1 -->\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
        << "\" height=\"" << hgt << "\" viewBox=\"0 0 " << w << " " << hgt << "\">\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "  <line x1=\"" << pad << "\" y1=\"" << hgt - pad << "\" x2=\"" << w - pad
        << "\" y2=\"" << hgt - pad << "\" stroke=\"black\"/>\n"
        << "  <line x1=\"" << pad << "\" y1=\"" << pad << "\" x2=\"" << pad << "\" y2=\""
        << hgt - pad << "\" stroke=\"black\"/>\n";
    for (std::int64_t x = 0; x <= c; ++x) {
        std::int64_t v2 = cliffdef::sigma(s, x).twice;
        bool member = s.contains(x);
        const char* fill = is_argmax(x) ? "red" : (member ? "black" : "none");
        const char* stroke = member ? "none" : "gray";
        out << "  <circle cx=\"" << px(x) << "\" cy=\"" << py(v2) << "\" r=\"3\" fill=\"" << fill
            << "\" stroke=\"" << stroke << "\"/>\n";
    }
    out << "</svg>\n";
}

int with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return kExitUsage;
    }
    fn(out);
    out.flush();
    if (!out) {
        std::cerr << "error: write to " << path << " failed\n";
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clifford defects of numerical semigroups"};
    app.require_subcommand(1);
    // --h is a family parameter below, so keep only the long help flag.
    app.set_help_flag("--help", "print help");

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    app.add_option("--conductor-cap", g.conductor_cap,
                   "largest conductor materialized for exhaustive verification")
        ->capture_default_str();

    // analyze -------------------------------------------------------------
    std::vector<std::string> analyze_gens;
    auto* cmd_analyze = app.add_subcommand("analyze", "invariants and defects of <gens...>");
    cmd_analyze->add_option("gens", analyze_gens, "generators")->required();

    // family --------------------------------------------------------------
    std::string family_name_arg;
    FamilyParams fp;
    bool verify = false;
    auto* cmd_family = app.add_subcommand("family", "closed-form results for one family instance");
    cmd_family->add_option("name", family_name_arg, "family name")->required();
    cmd_family->add_option("--m", fp.m);
    cmd_family->add_option("--h", fp.h);
    cmd_family->add_option("--q", fp.q);
    cmd_family->add_option("--q0", fp.q0);
    cmd_family->add_option("--t", fp.t);
    cmd_family->add_option("--r", fp.r);
    cmd_family->add_option("--g", fp.g);
    cmd_family->add_flag("--verify", verify, "compare against the exhaustive profile");

    // sweep ---------------------------------------------------------------
    std::string sweep_family;
    std::string sm, sh, sq, sq0, st, sr, sg;
    unsigned jobs = 1;
    bool corrupt = false;
    auto* cmd_sweep = app.add_subcommand("sweep", "closed form vs oracle over a parameter grid");
    cmd_sweep->add_option("name", sweep_family, "family name")->required();
    cmd_sweep->add_option("--m", sm, "range, e.g. 2..40");
    cmd_sweep->add_option("--h", sh, "range, e.g. 1..m-1");
    cmd_sweep->add_option("--q", sq);
    cmd_sweep->add_option("--q0", sq0, "list, e.g. 2,4,8");
    cmd_sweep->add_option("--t", st);
    cmd_sweep->add_option("--r", sr);
    cmd_sweep->add_option("--g", sg);
    cmd_sweep->add_option("--jobs", jobs, "parallel workers")->capture_default_str();
    cmd_sweep->add_flag("--corrupt-closed-form", corrupt)->group("");  // test-only hook

    // delta ---------------------------------------------------------------
    std::vector<std::string> delta_gens;
    auto* cmd_delta = app.add_subcommand("delta", "the Delta profile of <gens...>");
    cmd_delta->add_option("gens", delta_gens, "generators")->required();

    // code-bounds ---------------------------------------------------------
    std::vector<std::string> cb_gens;
    std::int64_t cb_m = 0, cb_d = 0;
    auto* cmd_bounds = app.add_subcommand("code-bounds", "one-point code dimension bounds");
    cmd_bounds->add_option("gens", cb_gens, "generators")->required();
    cmd_bounds->add_option("--m", cb_m, "pole divisor degree")->required();
    cmd_bounds->add_option("--d", cb_d, "minimum distance for MA capability");

    // plot ----------------------------------------------------------------
    std::vector<std::string> plot_gens;
    std::string plot_family, plot_format = "svg", plot_out = "-";
    FamilyParams pp;
    auto* cmd_plot = app.add_subcommand("plot", "staircase plot of sigma over [0, c]");
    cmd_plot->add_option("gens", plot_gens, "generators");
    cmd_plot->add_option("--family", plot_family, "family name instead of generators");
    cmd_plot->add_option("--m", pp.m);
    cmd_plot->add_option("--h", pp.h);
    cmd_plot->add_option("--q", pp.q);
    cmd_plot->add_option("--q0", pp.q0);
    cmd_plot->add_option("--t", pp.t);
    cmd_plot->add_option("--r", pp.r);
    cmd_plot->add_option("--g", pp.g);
    cmd_plot->add_option("--format", plot_format)->check(CLI::IsMember({"svg", "csv"}));
    cmd_plot->add_option("--out", plot_out, "output path, - for stdout");

    for (CLI::App* sub : {cmd_analyze, cmd_family, cmd_sweep, cmd_delta, cmd_bounds, cmd_plot}) {
        sub->set_help_flag("--help", "print help");
        sub->fallthrough();  // let global --format / --conductor-cap follow the subcommand
    }

    try {
        app.parse(argc, argv);

        if (cmd_analyze->parsed()) {
            NumericalSemigroup s =
                NumericalSemigroup::from_generators(parse_generators(analyze_gens));
            cliffdef::AnalysisReport rep = cliffdef::analyze(s);
            if (g.format == "json")
                std::cout << cliffdef::to_json(rep).dump(2) << "\n";
            else
                print_analysis_table(rep, std::cout);
            return kExitOk;
        }

        if (cmd_family->parsed()) {
            auto fam = cliffdef::family_from_name(family_name_arg);
            if (!fam) throw CLI::ValidationError("family", "unknown family: " + family_name_arg);
            cliffdef::FamilyResult fr = build_family(*fam, fp, g.conductor_cap);
            json j = family_json(fr);
            std::string detail;
            VerifyStatus status = VerifyStatus::Skipped;
            if (verify) {
                status = verify_family(fr, /*corrupt=*/false, detail);
                j["verify"] = status == VerifyStatus::Ok        ? "ok"
                              : status == VerifyStatus::Mismatch ? "mismatch"
                                                                 : "skipped";
                j["verify_detail"] = detail;
            }
            if (g.format == "json") {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << cliffdef::family_name(fr.family) << " " << params_string(fr)
                          << "\n  genus " << fr.genus_formula << ", conductor "
                          << fr.conductor_formula << "\n  argmax " << fr.argmax_closed_form
                          << ", defect "
                          << (fr.defect_closed_form ? fr.defect_closed_form->str() : "n/a") << "\n";
                if (verify) std::cout << "  verify: " << detail << "\n";
            }
            return verify && status == VerifyStatus::Mismatch ? kExitMismatch : kExitOk;
        }

        if (cmd_sweep->parsed()) {
            auto fam = cliffdef::family_from_name(sweep_family);
            if (!fam) throw CLI::ValidationError("family", "unknown family: " + sweep_family);

            // Build the instance grid in canonical (sorted) parameter order.
            std::vector<FamilyParams> grid;
            std::vector<std::string> invalid;  // rejected combinations
            auto range = [](const std::string& s, const char* what) {
                if (s.empty()) throw CLI::ValidationError("sweep", std::string("missing --") + what);
                return RangeSpec::parse(s);
            };
            switch (*fam) {
                case cliffdef::Family::Interval: {
                    RangeSpec ms = range(sm, "m");
                    RangeSpec hs = sh.empty() ? RangeSpec{{}, true} : RangeSpec::parse(sh);
                    for (std::int64_t m : ms.values) {
                        if (hs.follows_m) {
                            for (std::int64_t h = 1; h <= m - 1; ++h)
                                grid.push_back({.m = m, .h = h});
                        } else {
                            for (std::int64_t h : hs.values)
                                if (h >= 1 && h <= m - 1) grid.push_back({.m = m, .h = h});
                        }
                    }
                    break;
                }
                case cliffdef::Family::Klein:
                    for (std::int64_t m : range(sm, "m").values) grid.push_back({.m = m});
                    break;
                case cliffdef::Family::HermitianQuotient:
                    for (std::int64_t q : range(sq, "q").values)
                        for (std::int64_t m = 2; m < q; ++m)
                            if ((q + 1) % m == 0) grid.push_back({.m = m, .q = q});
                    break;
                case cliffdef::Family::PedersenSorensen:
                    for (std::int64_t q0 : range(sq0, "q0").values)
                        for (std::int64_t t : range(st, "t").values) {
                            FamilyParams p{.q0 = q0, .t = t};
                            try {
                                build_family(*fam, p, 0);
                                grid.push_back(p);
                            } catch (const cliffdef::Error&) {
                                invalid.push_back("q0=" + std::to_string(q0) +
                                                  " t=" + std::to_string(t));
                            }
                        }
                    break;
                case cliffdef::Family::Suzuki:
                    for (std::int64_t q0 : range(sq0, "q0").values) grid.push_back({.q0 = q0});
                    break;
                case cliffdef::Family::NormTrace:
                    for (std::int64_t q : range(sq, "q").values)
                        for (std::int64_t r : range(sr, "r").values)
                            grid.push_back({.q = q, .r = r});
                    break;
                case cliffdef::Family::Hyperelliptic:
                    for (std::int64_t gg : range(sg, "g").values) grid.push_back({.g = gg});
                    break;
            }

            struct Result {
                VerifyStatus status;
                std::string label, detail;
            };
            std::vector<Result> results(grid.size());
            std::atomic<std::size_t> next{0};
            auto worker = [&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= grid.size()) return;
                    try {
                        cliffdef::FamilyResult fr = build_family(*fam, grid[i], g.conductor_cap);
                        results[i].label = params_string(fr);
                        results[i].status = verify_family(fr, corrupt, results[i].detail);
                    } catch (const cliffdef::Error& e) {
                        results[i].status = VerifyStatus::Mismatch;
                        results[i].detail = e.what();
                    }
                }
            };
            unsigned n = std::max(1u, jobs);
            std::vector<std::thread> pool;
            for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
            worker();
            for (auto& th : pool) th.join();

            std::size_t passed = 0, failed = 0, skipped = 0;
            for (const Result& r : results) {
                switch (r.status) {
                    case VerifyStatus::Ok: ++passed; break;
                    case VerifyStatus::Skipped:
                        ++skipped;
                        std::cerr << "warning: skipped " << r.label << ": " << r.detail << "\n";
                        break;
                    case VerifyStatus::Mismatch:
                        ++failed;
                        std::cout << "MISMATCH " << r.label << ": " << r.detail << "\n";
                        break;
                }
            }
            for (const std::string& s : invalid)
                std::cerr << "warning: invalid combination " << s << "\n";
            std::cout << "sweep " << sweep_family << ": " << passed << " passed, " << failed
                      << " failed, " << skipped << " skipped";
            if (!invalid.empty()) std::cout << ", " << invalid.size() << " invalid";
            std::cout << "\n";
            return failed ? kExitMismatch : kExitOk;
        }

        if (cmd_delta->parsed()) {
            NumericalSemigroup s = NumericalSemigroup::from_generators(parse_generators(delta_gens));
            std::int64_t max = cliffdef::delta(s, 0);
            std::vector<std::int64_t> argmax;
            std::vector<std::int64_t> values;
            for (std::int64_t a = 0; a <= s.conductor(); ++a) {
                std::int64_t d = cliffdef::delta(s, a);
                values.push_back(d);
                if (d > max) {
                    max = d;
                    argmax.clear();
                }
                if (d == max && (argmax.empty() || argmax.back() != a)) argmax.push_back(a);
            }
            if (g.format == "json") {
                json j;
                j["generators"] = s.generators();
                j["conductor"] = s.conductor();
                j["values"] = values;
                j["max"] = max;
                j["argmax"] = argmax;
                std::cout << j.dump(2) << "\n";
            } else {
                for (std::int64_t a = 0; a <= s.conductor(); ++a)
                    std::cout << a << "\t" << values[static_cast<std::size_t>(a)] << "\n";
                std::cout << "max " << max << " at " << join_ints(argmax) << "\n";
            }
            return kExitOk;
        }

        if (cmd_bounds->parsed()) {
            NumericalSemigroup s = NumericalSemigroup::from_generators(parse_generators(cb_gens));
            cliffdef::CodeBoundReport rep = cliffdef::bound_report(s, cb_m);
            json j;
            j["m"] = rep.m;
            j["genus"] = rep.genus;
            j["duursma_defect"] = cliffdef::to_json(rep.duursma);
            j["riemann_roch"] = {{"raw", rep.rr_raw}, {"bound", rep.rr_bound}};
            j["clifford"] = {{"raw", cliffdef::to_json(rep.clifford_raw)},
                             {"bound", rep.clifford_bound}};
            j["exact_dimension"] = rep.exact_dimension;
            j["winner"] = rep.winner == cliffdef::CodeBoundReport::Winner::Clifford ? "clifford"
                          : rep.winner == cliffdef::CodeBoundReport::Winner::RiemannRoch
                              ? "riemann-roch"
                              : "tie";
            if (rep.clifford_wins_interval)
                j["clifford_wins_interval"] = {rep.clifford_wins_interval->first,
                                               rep.clifford_wins_interval->second};
            else
                j["clifford_wins_interval"] = json(nullptr);
            if (cmd_bounds->count("--d")) {
                HalfInt raw = cliffdef::ma_capability_raw(s, cb_d);
                j["ma_capability"] = {{"d", cb_d},
                                      {"errors", cliffdef::ma_capability(s, cb_d)},
                                      {"raw", cliffdef::to_json(raw)},
                                      {"clamped", raw.twice < 0}};
            }
            if (g.format == "json") {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "m " << rep.m << ", genus " << rep.genus << ", s(Q) "
                          << rep.duursma.str() << "\n"
                          << "riemann-roch bound " << rep.rr_bound << " (raw " << rep.rr_raw
                          << ")\nclifford bound " << rep.clifford_bound << " (raw "
                          << rep.clifford_raw.str() << ")\nexact l(m) " << rep.exact_dimension
                          << "\nwinner " << j["winner"].get<std::string>() << "\n";
                if (cmd_bounds->count("--d"))
                    std::cout << "MA capability (d=" << cb_d
                              << "): " << cliffdef::ma_capability(s, cb_d) << " errors\n";
            }
            return kExitOk;
        }

        if (cmd_plot->parsed()) {
            NumericalSemigroup s = [&] {
                if (!plot_family.empty()) {
                    auto fam = cliffdef::family_from_name(plot_family);
                    if (!fam)
                        throw CLI::ValidationError("family", "unknown family: " + plot_family);
                    cliffdef::FamilyResult fr = build_family(*fam, pp, g.conductor_cap);
                    if (!fr.semigroup)
                        throw cliffdef::InvalidInput("instance conductor exceeds --conductor-cap");
                    return *fr.semigroup;
                }
                if (plot_gens.empty())
                    throw CLI::ValidationError("plot", "need generators or --family");
                return NumericalSemigroup::from_generators(parse_generators(plot_gens));
            }();
            return with_output(plot_out, [&](std::ostream& out) {
                if (plot_format == "csv")
                    emit_csv(s, out);
                else
                    emit_svg(s, out);
            });
        }
    } catch (const cliffdef::NotNumerical& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRejected;
    } catch (const cliffdef::UnsupportedParameters& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRejected;
    } catch (const cliffdef::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    return kExitUsage;
}
