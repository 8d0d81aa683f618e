// Command-line front end: parse matroid inputs, dispatch computations, emit
// human tables and machine JSON.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "csmfan/io.hpp"

using namespace csmfan;

namespace {

json read_document(const std::string& where) {
    std::string text;
    if (where == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(where);
        if (!in) throw ParseError("cannot open " + where);
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON in ") + where + ": " + e.what());
    }
}

// spec is "uniform R M", "-" for stdin, or a path to a JSON document
Matroid load_spec(const std::string& spec) {
    std::istringstream words(spec);
    std::string head;
    words >> head;
    if (head == "uniform") {
        int r = 0, m = 0;
        if (!(words >> r >> m)) throw ParseError("usage: \"uniform R M\"");
        return Matroid::uniform(r, m).named("U(" + std::to_string(r) + "," +
                                            std::to_string(m) + ")");
    }
    return matroid_from_document(read_document(spec));
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ParseError("bad integer list: " + csv);
        }
    }
    if (out.empty()) throw ParseError("empty integer list");
    return out;
}

std::string display_name(const Matroid& m) {
    return m.name().empty() ? "(unnamed)" : m.name();
}

int cmd_tutte(const std::string& spec, const std::string& order_csv, bool as_json) {
    Matroid m = load_spec(spec);
    ElementOrder order = order_csv.empty()
                             ? ElementOrder::natural(m.ground_size())
                             : ElementOrder::from_permutation(parse_int_list(order_csv));
    TuttePolynomial t = tutte(m, order);

    if (as_json) {
        json doc = tutte_to_json(t);
        doc["matroid"] = display_name(m);
        doc["beta"] = to_int64(t.coeff(1, 0));
        doc["rendered"] = t.render();
        if (m.is_loopless())
            doc["reduced_char_poly_shifted"] = reduced_char_poly(m, true).render("q");
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    std::cout << "matroid " << display_name(m) << ": ground " << m.ground_size()
              << ", rank " << m.rank() << ", " << m.bases().size() << " bases\n";
    std::cout << "T(M;x,y) = " << t.render() << "\n";
    std::cout << "beta = " << t.coeff(1, 0) << "\n";
    for (const auto& [ij, c] : t.terms)
        std::cout << "  t[" << ij.first << "][" << ij.second << "] = " << c << "\n";
    if (m.is_loopless()) {
        std::cout << "reduced char poly (shifted): "
                  << reduced_char_poly(m, true).render("q") << "\n";
    } else {
        std::cout << "matroid has loops " << m.loops().to_string()
                  << "; reduced characteristic polynomial not defined\n";
    }
    return 0;
}

int cmd_csm(const std::string& spec, int k, bool as_json) {
    Matroid m = load_spec(spec);
    const int d = m.rank() - 1;
    std::vector<int> ks;
    if (k >= 0) {
        if (k > d) throw ParseError("k exceeds the fan dimension d = " + std::to_string(d));
        ks = {k};
    } else {
        for (int i = 0; i <= d; ++i) ks.push_back(i);
    }

    json all = json::array();
    for (int kk : ks) {
        CsmCycle c = csm_cycle(m, kk);
        if (as_json) {
            json entry;
            entry["k"] = kk;
            entry["fan"] = fan_to_json(c.fan);
            entry["flags"] = json::array();
            for (const auto& [flag, w] : c.weighted_flags)
                entry["flags"].push_back(
                    {{"chain", flag_to_json(flag)}, {"weight", to_int64(w)}});
            all.push_back(entry);
            continue;
        }
        std::cout << "csm_" << kk << "(" << display_name(m) << "): "
                  << c.fan.cones().size()
                  << (c.fan.cones().size() == 1 ? " cone" : " cones")
                  << " of dimension " << kk << "\n";
        for (const auto& [flag, w] : c.weighted_flags)
            std::cout << "  weight " << w << "  " << render_flag(flag) << "\n";
        if (!c.dropped_flags.empty())
            std::cout << "  (" << c.dropped_flags.size()
                      << " flags dropped with vanishing beta product)\n";
    }
    if (as_json) std::cout << all.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& spec, const std::string& seeds_csv, bool as_json) {
    Matroid m = load_spec(spec);
    std::vector<int> seeds = seeds_csv.empty() ? std::vector<int>{0}
                                               : parse_int_list(seeds_csv);
    TheoremReport first = verify_main_theorem(m, static_cast<uint64_t>(seeds[0]));
    bool all_pass = first.all_pass;
    for (size_t i = 1; i < seeds.size(); ++i) {
        TheoremReport rep = verify_main_theorem(m, static_cast<uint64_t>(seeds[i]));
        all_pass = all_pass && rep.all_pass;
        for (size_t r = 0; r < rep.rows.size(); ++r)
            if (rep.rows[r].geometric != first.rows[r].geometric) all_pass = false;
    }

    if (as_json) {
        json doc = theorem_report_to_json(first);
        doc["seeds"] = seeds;
        doc["pass"] = all_pass;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "verify " << display_name(m) << " (rank " << m.rank() << ", "
                  << seeds.size() << " seed" << (seeds.size() == 1 ? "" : "s")
                  << ")\n";
        for (const TheoremRow& row : first.rows)
            std::cout << "  k=" << row.k << ": geometric " << row.geometric
                      << ", combinatorial " << row.combinatorial << ", tutte "
                      << row.tutte << (row.pass ? "  [ok]" : "  [MISMATCH]") << "\n";
        std::cout << (all_pass ? "all checks pass" : "MISMATCH DETECTED") << "\n";
    }
    return all_pass ? 0 : 1;
}

int cmd_balance(const std::string& spec, const std::string& fan_file, bool as_json) {
    std::vector<std::pair<std::string, BalanceReport>> reports;
    if (!fan_file.empty()) {
        WeightedFan fan = fan_from_json(read_document(fan_file));
        reports.push_back({"fan " + fan_file, balancing_check(fan)});
    } else {
        Matroid m = load_spec(spec);
        reports.push_back({"bergman", balancing_check(bergman_fan(m))});
        for (int k = 0; k < m.rank(); ++k)
            reports.push_back({"csm_" + std::to_string(k),
                               balancing_check(csm_cycle(m, k).fan)});
    }

    bool all_balanced = true;
    json doc = json::array();
    for (const auto& [label, rep] : reports) {
        all_balanced = all_balanced && rep.balanced;
        if (as_json) {
            json entry = balance_report_to_json(rep);
            entry["fan"] = label;
            doc.push_back(entry);
        } else {
            std::cout << label << ": "
                      << (rep.balanced ? "balanced" : "NOT BALANCED") << " ("
                      << rep.ridges_checked << " ridges)\n";
            for (const RidgeFailure& f : rep.failures) {
                std::cout << "  failing ridge rays:";
                if (f.ridge_rays.empty()) std::cout << " (origin)";
                for (const IVec& r : f.ridge_rays) {
                    std::cout << " [";
                    for (size_t i = 0; i < r.size(); ++i)
                        std::cout << (i ? "," : "") << r[i];
                    std::cout << "]";
                }
                std::cout << "\n";
            }
        }
    }
    if (as_json) std::cout << doc.dump(2) << "\n";
    return all_balanced ? 0 : 1;
}

int cmd_flags(const std::string& spec, int k, bool increasing_only, bool as_json) {
    Matroid m = load_spec(spec);
    std::vector<int> ks;
    if (k >= 0)
        ks = {k};
    else
        for (int i = 1; i <= m.rank(); ++i) ks.push_back(i);

    json doc = json::array();
    for (int kk : ks) {
        auto list = increasing_only ? increasing_flags(m, kk) : proper_flags(m, kk);
        if (as_json) {
            for (const FlagOfFlats& f : list) doc.push_back(flag_to_json(f));
            continue;
        }
        std::cout << (increasing_only ? "increasing " : "proper ") << "flags of length "
                  << kk << ": " << list.size() << "\n";
        for (const FlagOfFlats& f : list) std::cout << "  " << render_flag(f) << "\n";
    }
    if (as_json) std::cout << doc.dump(2) << "\n";
    return 0;
}

int cmd_degree(const std::string& spec, const std::string& fan_file, int k,
               uint64_t seed, bool as_json) {
    DegreeResult res = [&] {
        if (!fan_file.empty())
            return degree_with_points(fan_from_json(read_document(fan_file)), seed);
        Matroid m = load_spec(spec);
        if (k >= 0) return degree_with_points(csm_cycle(m, k).fan, seed);
        return degree_with_points(bergman_fan(m), seed);
    }();

    if (as_json) {
        std::cout << intersection_report_to_json(res.points).dump(2) << "\n";
    } else {
        std::cout << "degree = " << res.degree << " (" << res.points.size()
                  << " intersection points)\n";
        for (const IntersectionPoint& p : res.points) {
            std::cout << "  mult " << p.multiplicity << " at (";
            for (size_t i = 0; i < p.point.size(); ++i)
                std::cout << (i ? ", " : "") << rat_to_string(p.point[i]);
            std::cout << ")\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact CSM cycles of matroids as weighted tropical fans"};
    app.require_subcommand(1);

    std::string spec, order_csv, seeds_csv, fan_file;
    int k = -1;
    uint64_t seed = 0;
    bool as_json = false, increasing_only = false;

    auto add_json = [&](CLI::App* cmd) {
        cmd->add_flag("--json", as_json, "machine-readable output");
    };

    auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial, beta, strata");
    tutte_cmd->add_option("spec", spec, "matroid spec: \"uniform R M\", file, or -")
        ->required();
    tutte_cmd->add_option("--order", order_csv, "element order as a permutation");
    add_json(tutte_cmd);

    auto* csm_cmd = app.add_subcommand("csm", "CSM cycles as weighted fans");
    csm_cmd->add_option("spec", spec)->required();
    csm_cmd->add_option("-k,--k", k, "skeleton index (default: all)");
    add_json(csm_cmd);

    auto* verify_cmd =
        app.add_subcommand("verify", "three-route degree check for every k");
    verify_cmd->add_option("spec", spec)->required();
    verify_cmd->add_option("--seeds", seeds_csv, "perturbation seeds (default 0)");
    add_json(verify_cmd);

    auto* balance_cmd = app.add_subcommand("balance", "balancing condition report");
    balance_cmd->add_option("spec", spec);
    balance_cmd->add_option("--fan", fan_file, "check a fan JSON file instead");
    add_json(balance_cmd);

    auto* flags_cmd = app.add_subcommand("flags", "enumerate proper flags of flats");
    flags_cmd->add_option("spec", spec)->required();
    flags_cmd->add_option("-k,--k", k, "flag length (default: all)");
    flags_cmd->add_flag("--increasing", increasing_only, "only increasing flags");
    add_json(flags_cmd);

    auto* degree_cmd = app.add_subcommand("degree", "stable-intersection degree");
    degree_cmd->add_option("spec", spec);
    degree_cmd->add_option("--fan", fan_file, "fan JSON file instead of a matroid");
    degree_cmd->add_option("-k,--k", k, "csm index (default: Bergman fan)");
    degree_cmd->add_option("--seed", seed, "perturbation seed");
    add_json(degree_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (tutte_cmd->parsed()) return cmd_tutte(spec, order_csv, as_json);
        if (csm_cmd->parsed()) return cmd_csm(spec, k, as_json);
        if (verify_cmd->parsed()) return cmd_verify(spec, seeds_csv, as_json);
        if (balance_cmd->parsed()) {
            if (spec.empty() && fan_file.empty())
                throw ParseError("balance needs a matroid spec or --fan");
            return cmd_balance(spec, fan_file, as_json);
        }
        if (flags_cmd->parsed()) return cmd_flags(spec, k, increasing_only, as_json);
        if (degree_cmd->parsed()) {
            if (spec.empty() && fan_file.empty())
                throw ParseError("degree needs a matroid spec or --fan");
            return cmd_degree(spec, fan_file, k, seed, as_json);
        }
    } catch (const LoopPresent&) {
        std::cerr << "error: this computation is defined for loopless matroids only\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
