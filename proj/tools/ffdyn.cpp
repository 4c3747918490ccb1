#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffdyn/abc.hpp"
#include "ffdyn/construct.hpp"
#include "ffdyn/heights.hpp"
#include "ffdyn/parse.hpp"
#include "ffdyn/print.hpp"
#include "ffdyn/witness.hpp"

using nlohmann::json;
using namespace ffdyn;

namespace {

const char* status_name(WitnessStatus s) {
    switch (s) {
        case WitnessStatus::realizable: return "Realizable";
        case WitnessStatus::not_realizable_by_finite_places: return "NotRealizableByFinitePlaces";
        case WitnessStatus::capped: return "Capped";
    }
    return "?";
}

const char* status_name(RealizeStatus s) {
    switch (s) {
        case RealizeStatus::realized: return "Realized";
        case RealizeStatus::not_realizable: return "NotRealizable";
        case RealizeStatus::capped: return "Capped";
    }
    return "?";
}

json witness_to_json(const WitnessReport& r) {
    json j;
    j["requested"] = {r.requested.m, r.requested.n};
    j["divisor"] = poly_to_string(r.divisor, "t");
    j["rational_witnesses"] = json::array();
    for (const auto& c : r.rational_witnesses) j["rational_witnesses"].push_back(to_string(c));
    j["infinity_is_witness"] = r.infinity_is_witness;
    j["status"] = status_name(r.status);
    if (r.globally_preperiodic) {
        j["globally_preperiodic"] = true;
        j["failing_places"] = poly_to_string(r.failing_places, "t");
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

void print_witness_text(const WitnessReport& r) {
    std::cout << "portrait (" << r.requested.m << "," << r.requested.n << "): "
              << status_name(r.status) << "\n";
    std::cout << "  divisor: " << poly_to_string(r.divisor, "t") << "\n";
    if (!r.rational_witnesses.empty()) {
        std::cout << "  rational witnesses:";
        for (const auto& c : r.rational_witnesses) std::cout << ' ' << to_string(c);
        std::cout << "\n";
    }
    if (r.infinity_is_witness) std::cout << "  the infinite place is a witness\n";
    if (r.globally_preperiodic)
        std::cout << "  alpha is globally preperiodic; failing places divide "
                  << poly_to_string(r.failing_places, "t") << "\n";
    if (!r.note.empty()) std::cout << "  note: " << r.note << "\n";
}

std::string cell_witness(const WitnessReport& r) {
    if (!r.rational_witnesses.empty()) return to_string(r.rational_witnesses.front());
    if (r.infinity_is_witness) return "inf";
    return "";
}

json coeff_witness_to_json(const CoefficientWitness& w) {
    json j;
    j["status"] = status_name(w.status);
    j["verified"] = w.verified;
    j["assignment"] = json::array();
    for (const auto& a : w.assignment) {
        json e;
        e["coefficient"] = a.name;
        if (a.is_rational) {
            e["value"] = to_string(a.value);
        } else if (a.chained) {
            e["any_root_of"] = bipoly_to_string(a.chain_root_of, "b", "a");
            e["over"] = "previous coordinate";
        } else {
            e["any_root_of"] = poly_to_string(a.root_of, a.name == "a0" ? "a" : a.name);
        }
        j["assignment"].push_back(e);
    }
    if (!w.note.empty()) j["note"] = w.note;
    return j;
}

std::vector<Rational> parse_constant_list(const std::string& text) {
    std::vector<Rational> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        std::string piece = text.substr(start, end - start);
        if (!piece.empty()) out.push_back(parse_constant(piece));
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

std::vector<Portrait> parse_portrait_list(const std::string& text) {
    std::vector<Portrait> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find(';', start);
        if (end == std::string::npos) end = text.size();
        std::string piece = text.substr(start, end - start);
        if (piece.find_first_not_of(" \t") != std::string::npos)
            out.push_back(parse_portrait(piece));
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for preperiodicity portraits of rational maps over Q(t)"};
    app.require_subcommand(1);

    std::string map_text, alpha_text, place_text, exclude_text, eps_text = "1/1024";
    std::string csv_path, candidates_text, points_text, portraits_text;
    std::string a_text, b_text, f_text, gamma_text;
    long m = 0, n = 1, max_m = 3, max_n = 4, bound = 64;
    long degree_cap = kDefaultDegreeCap;
    int degree = 2;
    bool as_json = false, trust_place = false, serial = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", as_json, "machine-readable output");
        cmd->add_option("--degree-cap", degree_cap, "z-degree cap for symbolic work");
    };

    auto* c_height = app.add_subcommand("height", "Weil height of a point of P^1(Q(t))");
    c_height->add_option("--alpha", alpha_text, "point")->required();
    add_common(c_height);

    auto* c_canheight = app.add_subcommand("canheight", "canonical height with certified error");
    c_canheight->add_option("--map", map_text)->required();
    c_canheight->add_option("--alpha", alpha_text)->required();
    c_canheight->add_option("--eps", eps_text, "error budget (default 1/1024)");
    add_common(c_canheight);

    auto* c_portrait = app.add_subcommand("portrait", "portrait of alpha modulo a place");
    c_portrait->add_option("--map", map_text)->required();
    c_portrait->add_option("--alpha", alpha_text)->required();
    c_portrait->add_option("--place", place_text)->required();
    c_portrait->add_option("--bound", bound, "iteration bound (default 64)");
    c_portrait->add_flag("--trust-place", trust_place, "skip the irreducibility certificate");
    add_common(c_portrait);

    auto* c_witness = app.add_subcommand("witness", "divisor of places realizing a portrait");
    c_witness->add_option("--map", map_text)->required();
    c_witness->add_option("--alpha", alpha_text)->required();
    c_witness->add_option("--m", m)->required();
    c_witness->add_option("--n", n)->required();
    c_witness->add_option("--exclude", exclude_text, "extra places to exclude: \"poly;poly;inf\"");
    add_common(c_witness);

    auto* c_grid = app.add_subcommand("grid", "witness reports over a portrait rectangle");
    c_grid->add_option("--map", map_text)->required();
    c_grid->add_option("--alpha", alpha_text)->required();
    c_grid->add_option("--max-m", max_m);
    c_grid->add_option("--max-n", max_n);
    c_grid->add_option("--exclude", exclude_text);
    c_grid->add_option("--csv", csv_path, "also write m,n,status,witness rows");
    c_grid->add_flag("--serial", serial, "disable the parallel cell evaluator");
    add_common(c_grid);

    auto* c_sweep = app.add_subcommand("sweep", "witnesses for many constant starting points");
    c_sweep->add_option("--map", map_text)->required();
    c_sweep->add_option("--m", m)->required();
    c_sweep->add_option("--n", n)->required();
    c_sweep->add_option("--candidates", candidates_text, "comma-separated constants")->required();
    c_sweep->add_option("--exclude", exclude_text);
    add_common(c_sweep);

    auto* c_xset = app.add_subcommand("xset", "periods whose points are all totally ramified");
    c_xset->add_option("--map", map_text)->required();
    c_xset->add_option("--max-n", max_n);
    add_common(c_xset);

    auto* c_yset = app.add_subcommand("yset", "preperiods blocked by total ramification");
    c_yset->add_option("--map", map_text)->required();
    c_yset->add_option("--alpha", alpha_text)->required();
    c_yset->add_option("--max-m", max_m);
    add_common(c_yset);

    auto* c_abc = app.add_subcommand("abc", "Mason-Stothers and zero-place-count oracles");
    c_abc->add_option("--a", a_text, "first polynomial in t (with --b)");
    c_abc->add_option("--b", b_text, "second polynomial in t");
    c_abc->add_option("--f", f_text, "monic separable polynomial in z (with --gamma)");
    c_abc->add_option("--gamma", gamma_text, "element of Q(t)");
    add_common(c_abc);

    auto* c_construct = app.add_subcommand("construct", "normal-form coefficients realizing portraits");
    c_construct->add_option("--degree", degree)->required();
    c_construct->add_option("--points", points_text, "comma-separated constants")->required();
    c_construct->add_option("--portraits", portraits_text, "semicolon-separated (m,n)")->required();
    add_common(c_construct);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (c_height->parsed()) {
            long h = weil_height(parse_point(alpha_text));
            if (as_json)
                std::cout << json{{"height", h}}.dump() << "\n";
            else
                std::cout << h << "\n";
        } else if (c_canheight->parsed()) {
            RationalMap phi = parse_map(map_text);
            auto est = canonical_height(phi, parse_point(alpha_text), parse_constant(eps_text),
                                        degree_cap);
            if (as_json) {
                json j{{"center", to_string(est.center)},
                       {"radius", to_string(est.radius)},
                       {"iterations_used", est.iterations_used}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << to_string(est.center) << " +/- " << to_string(est.radius) << "  ("
                          << est.iterations_used << " iterations)\n";
            }
        } else if (c_portrait->parsed()) {
            RationalMap phi = parse_map(map_text);
            auto p = portrait_mod_place(phi, parse_point(alpha_text),
                                        parse_place(place_text, trust_place), bound);
            if (as_json) {
                json j;
                if (p)
                    j["portrait"] = {p->m, p->n};
                else
                    j["portrait"] = nullptr;
                std::cout << j.dump() << "\n";
            } else if (p) {
                std::cout << "(" << p->m << "," << p->n << ")\n";
            } else {
                std::cout << "unknown within bound " << bound << "\n";
            }
        } else if (c_witness->parsed()) {
            RationalMap phi = parse_map(map_text);
            PlaceSet s = exclude_text.empty() ? PlaceSet::none() : parse_place_set(exclude_text);
            WitnessReport rep =
                find_witness(phi, parse_point(alpha_text), Portrait{m, n}, s, degree_cap);
            if (as_json)
                std::cout << witness_to_json(rep).dump() << "\n";
            else
                print_witness_text(rep);
            if (rep.status == WitnessStatus::capped) return 3;
        } else if (c_grid->parsed()) {
            RationalMap phi = parse_map(map_text);
            PlaceSet s = exclude_text.empty() ? PlaceSet::none() : parse_place_set(exclude_text);
            GridReport grid = portrait_grid(phi, parse_point(alpha_text), max_m, max_n, s,
                                            serial ? GridExecution::serial : GridExecution::parallel,
                                            degree_cap);
            if (!csv_path.empty()) {
                std::ofstream csv(csv_path);
                if (!csv) throw precondition_error("cannot open csv path " + csv_path);
                csv << "m,n,status,witness\n";
                for (const auto& cell : grid.cells)
                    csv << cell.portrait.m << ',' << cell.portrait.n << ','
                        << status_name(cell.report.status) << ',' << cell_witness(cell.report)
                        << "\n";
            }
            if (as_json) {
                json rows = json::array();
                for (const auto& cell : grid.cells) {
                    json r = witness_to_json(cell.report);
                    if (cell.m_in_y) r["m_in_Y"] = true;
                    if (cell.n_in_x) r["n_in_X"] = true;
                    rows.push_back(std::move(r));
                }
                json j{{"max_m", grid.max_m}, {"max_n", grid.max_n}, {"cells", rows}};
                std::cout << j.dump() << "\n";
            } else {
                for (const auto& cell : grid.cells) {
                    std::cout << "(" << cell.portrait.m << "," << cell.portrait.n << ") "
                              << status_name(cell.report.status);
                    std::string w = cell_witness(cell.report);
                    if (!w.empty()) std::cout << "  witness " << w;
                    if (cell.m_in_y) std::cout << "  [m in Y(phi,alpha)]";
                    if (cell.n_in_x) std::cout << "  [n in X(phi)]";
                    std::cout << "\n";
                }
            }
        } else if (c_sweep->parsed()) {
            RationalMap phi = parse_map(map_text);
            PlaceSet s = exclude_text.empty() ? PlaceSet::none() : parse_place_set(exclude_text);
            auto entries = starting_point_sweep(phi, Portrait{m, n}, s,
                                                parse_constant_list(candidates_text), degree_cap);
            if (as_json) {
                json rows = json::array();
                for (const auto& e : entries) {
                    json r = witness_to_json(e.report);
                    r["candidate"] = to_string(e.candidate);
                    rows.push_back(std::move(r));
                }
                std::cout << json{{"entries", rows}}.dump() << "\n";
            } else {
                for (const auto& e : entries) {
                    std::cout << "alpha = " << to_string(e.candidate) << ": "
                              << status_name(e.report.status);
                    std::string w = cell_witness(e.report);
                    if (!w.empty()) std::cout << "  witness " << w;
                    std::cout << "\n";
                }
            }
        } else if (c_xset->parsed()) {
            auto xs = x_set(parse_map(map_text), max_n, degree_cap);
            json j = json::array();
            for (long v : xs) j.push_back(v);
            if (as_json)
                std::cout << json{{"x_set", j}}.dump() << "\n";
            else {
                std::cout << "{";
                bool first = true;
                for (long v : xs) {
                    std::cout << (first ? "" : ", ") << v;
                    first = false;
                }
                std::cout << "}\n";
            }
        } else if (c_yset->parsed()) {
            auto ys = y_set(parse_map(map_text), parse_point(alpha_text), max_m, degree_cap);
            json j = json::array();
            for (long v : ys) j.push_back(v);
            if (as_json)
                std::cout << json{{"y_set", j}}.dump() << "\n";
            else {
                std::cout << "{";
                bool first = true;
                for (long v : ys) {
                    std::cout << (first ? "" : ", ") << v;
                    first = false;
                }
                std::cout << "}\n";
            }
        } else if (c_abc->parsed()) {
            AbcReport rep;
            if (!f_text.empty() || !gamma_text.empty()) {
                if (f_text.empty() || gamma_text.empty())
                    throw precondition_error("zero-place mode needs both --f and --gamma");
                ParsedExpr fe = parse_expression(f_text);
                if (fe.den.deg() > 0 || fe.den.coeff(0).deg() > 0)
                    throw precondition_error("--f must be a polynomial in z");
                UniPoly<RatFunc> f = to_ratfunc_poly(fe.num);
                f = f.scaled(RatFunc(1) / RatFunc(fe.den.coeff(0)));
                ParsedExpr ge = parse_expression(gamma_text);
                if (ge.num.deg() > 0 || ge.den.deg() > 0)
                    throw precondition_error("--gamma may not involve z");
                RatFunc gamma(ge.num.coeff(0), ge.den.coeff(0));
                rep = zero_place_count_check(f, gamma);
            } else {
                if (a_text.empty() || b_text.empty())
                    throw precondition_error("abc needs --a and --b, or --f and --gamma");
                auto to_tpoly = [](const std::string& text) {
                    ParsedExpr e = parse_expression(text);
                    if (e.num.deg() > 0 || e.den.deg() > 0 || e.den.coeff(0).deg() != 0)
                        throw precondition_error("abc inputs must be polynomials in t");
                    return e.num.coeff(0).scaled(Rational(1 / e.den.coeff(0).constant_term()));
                };
                rep = mason_stothers_check(to_tpoly(a_text), to_tpoly(b_text));
            }
            if (as_json) {
                json j{{"lhs", rep.lhs}, {"rhs", rep.rhs}, {"holds", rep.holds}, {"slack", rep.slack}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "lhs = " << rep.lhs << ", rhs = " << rep.rhs
                          << (rep.holds ? "  (holds, slack " : "  (VIOLATED, slack ")
                          << rep.slack << ")\n";
            }
        } else if (c_construct->parsed()) {
            auto points = parse_constant_list(points_text);
            auto portraits = parse_portrait_list(portraits_text);
            CoefficientWitness w = realize_chain(degree, points, portraits, degree_cap);
            if (as_json) {
                std::cout << coeff_witness_to_json(w).dump() << "\n";
            } else {
                std::cout << status_name(w.status) << (w.verified ? " (verified)" : "") << "\n";
                for (const auto& a : w.assignment) {
                    std::cout << "  " << a.name << " = ";
                    if (a.is_rational)
                        std::cout << to_string(a.value);
                    else if (a.chained)
                        std::cout << "any root of " << bipoly_to_string(a.chain_root_of, "b", "a");
                    else
                        std::cout << "any root of "
                                  << poly_to_string(a.root_of, a.name == "a0" ? "a" : a.name);
                    std::cout << "\n";
                }
                if (!w.note.empty()) std::cout << "  note: " << w.note << "\n";
            }
            if (w.status == RealizeStatus::capped) return 3;
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 4;
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
