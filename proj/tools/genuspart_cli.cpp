// Command-line front end: enumeration, reduction, census, generating-function
// expansion and cross-verification of the closed formulas against brute force.
#include <CLI11.hpp>

#include "genuspart/enumerate.hpp"
#include "genuspart/genus_gf.hpp"
#include "genuspart/json_io.hpp"
#include "genuspart/partition.hpp"
#include "genuspart/reduce.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace gp = genuspart;
using nlohmann::json;

namespace {

struct GlobalOpts {
    std::string format = "text";
    std::uint64_t budget = 100'000'000;
    int threads = 1;
    std::uint64_t seed = 20240915;

    bool json_out() const { return format == "json"; }
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- genus ------------------------------------------------------------

int cmd_genus(const GlobalOpts& g, const std::string& text) {
    gp::Partition p = gp::Partition::parse(text);
    gp::Permutation tau = p.tau();
    gp::Permutation faces = p.face_permutation();
    int genus = p.genus();
    int gmax = gp::genus_max(p.n(), p.type());
    if (g.json_out()) {
        json j = gp::to_json(p);
        j["type"] = p.type().str();
        j["tau"] = tau.cycle_string();
        j["faces"] = faces.cycle_string();
        j["face_count"] = p.face_count();
        j["genus"] = genus;
        j["genus_max"] = gmax;
        emit(j);
    } else {
        std::cout << "partition : " << p.str() << "\n"
                  << "n         : " << p.n() << "\n"
                  << "type      : " << p.type().str() << "\n"
                  << "tau       : " << tau.cycle_string() << "\n"
                  << "faces     : " << faces.cycle_string() << "\n"
                  << "face count: " << p.face_count() << "\n"
                  << "genus     : " << genus << "\n"
                  << "genus max : " << gmax << "\n";
    }
    return 0;
}

// ---- enumerate ----------------------------------------------------------

gp::ClassFilter parse_class(const std::string& s) {
    if (s == "all") return gp::ClassFilter::all;
    if (s == "primitive") return gp::ClassFilter::primitive;
    if (s == "semiprimitive") return gp::ClassFilter::semiprimitive;
    throw std::invalid_argument("unknown class filter: " + s);
}

struct EnumerateArgs {
    int n = 0;
    std::string type;
    int genus = -1;  // -1: no filter
    bool singleton_free = false;
    std::string klass = "all";
    bool list = false;
    bool orbits = false;
};

gp::EnumOptions make_options(const GlobalOpts& g, const EnumerateArgs& a) {
    gp::EnumOptions opt;
    if (!a.type.empty()) opt.type = gp::PartitionType::parse(a.type);
    if (a.genus >= 0) opt.genus = a.genus;
    opt.singleton_free = a.singleton_free;
    opt.klass = parse_class(a.klass);
    opt.budget = g.budget;
    opt.threads = g.threads;
    return opt;
}

int cmd_enumerate(const GlobalOpts& g, const EnumerateArgs& a) {
    gp::EnumOptions opt = make_options(g, a);
    if (a.list) {
        opt.threads = 1;  // deterministic stream order
        if (g.json_out()) {
            json arr = json::array();
            gp::for_each_partition(a.n, opt, [&](const gp::Partition& p, int genus) {
                json row = gp::to_json(p);
                row["genus"] = genus;
                arr.push_back(std::move(row));
            });
            emit(arr);
        } else {
            std::uint64_t count = 0;
            gp::for_each_partition(a.n, opt, [&](const gp::Partition& p, int genus) {
                std::cout << p.str() << "  genus " << genus << "\n";
                ++count;
            });
            std::cout << "total " << count << "\n";
        }
        return 0;
    }
    if (a.orbits) {
        std::vector<gp::OrbitRecord> orbits = gp::orbit_census(a.n, opt);
        if (g.json_out()) {
            emit(gp::to_json(orbits));
        } else {
            std::uint64_t weight = 0;
            for (const auto& o : orbits) {
                std::cout << o.representative.str() << "  stabilizer " << o.stabilizer_order
                          << "  weight " << o.orbit_length << "\n";
                weight += o.orbit_length;
            }
            std::cout << "orbits " << orbits.size() << "  total weight " << weight << "\n";
        }
        return 0;
    }
    gp::GenusCountTable table = gp::count_by_genus(a.n, opt);
    if (g.json_out()) {
        emit(gp::to_json(table));
    } else {
        std::cout << std::left << std::setw(18) << "type" << std::setw(7) << "genus"
                  << "count\n";
        for (const auto& [key, count] : table.cells)
            std::cout << std::left << std::setw(18) << key.first.str() << std::setw(7)
                      << key.second << count << "\n";
        std::cout << "total " << table.total() << "\n";
    }
    return 0;
}

// ---- reduce -------------------------------------------------------------

int cmd_reduce(const GlobalOpts& g, const std::string& text, bool trace,
               std::uint64_t confluence_trials) {
    gp::Partition p = gp::Partition::parse(text);
    gp::ReductionTrace t = gp::reduce(p);
    std::optional<gp::ConfluenceReport> conf;
    if (confluence_trials > 0) conf = gp::confluence_check(p, confluence_trials, g.seed);

    if (g.json_out()) {
        json j = gp::to_json(t);
        if (conf)
            j["confluence"] = json{{"trials", conf->trials}, {"consistent", conf->consistent}};
        emit(j);
    } else {
        std::cout << "input  : " << p.str() << "  (n=" << p.n() << ", genus " << t.genus
                  << ")\n";
        if (trace) {
            int i = 0;
            for (const auto& s : t.steps) {
                std::cout << "step " << ++i << ": " << gp::to_string(s.kind) << " ";
                for (std::size_t k = 0; k < s.removed.size(); ++k)
                    std::cout << (k ? "," : "{") << s.removed[k];
                std::cout << "}  n " << s.before_n << " -> " << s.after_n << "\n";
            }
        } else {
            std::cout << "steps  : " << t.steps.size() << "\n";
        }
        std::cout << "result : "
                  << (t.reduced.n() == 0 ? std::string("(empty)") : t.reduced.str())
                  << "  class " << gp::to_string(t.result_class) << "\n";
        if (conf)
            std::cout << "confluence: " << (conf->consistent ? "ok" : "FAILED") << " ("
                      << conf->trials << " trials)\n";
    }
    return conf && !conf->consistent ? 1 : 0;
}

// ---- gf -----------------------------------------------------------------

bool needs_poly(const gp::CumulantSpec& spec) {
    return spec.mode == gp::WeightMode::symbolic || spec.mode == gp::WeightMode::all_y ||
           spec.mode == gp::WeightMode::singleton_free_y;
}

template <class C>
gp::Series<C> run_pipeline(const gp::CumulantSpec& spec, int genus, int order) {
    gp::Series<C> W = gp::build_W<C>(spec, order);
    switch (genus) {
        case 0:
            return gp::genus0_gf(W);
        case 1:
            return gp::genus1_gf(W);
        case 2:
            return gp::genus2_gf(W);
        default:
            throw std::invalid_argument("gf supports genus 0, 1 or 2");
    }
}

template <class C>
int emit_gf(const GlobalOpts& g, const gp::CumulantSpec& spec, int genus, int order) {
    gp::Series<C> Z = run_pipeline<C>(spec, genus, order);
    if (g.json_out()) {
        json j = gp::to_json(Z);
        j["kappa"] = spec.str();
        j["genus"] = genus;
        emit(j);
    } else {
        std::cout << gp::series_string(Z) << "\n";
    }
    return 0;
}

int cmd_gf(const GlobalOpts& g, const std::string& kappa, int genus, int order) {
    gp::CumulantSpec spec = gp::CumulantSpec::parse(kappa);
    return needs_poly(spec) ? emit_gf<gp::Poly>(g, spec, genus, order)
                            : emit_gf<gp::Rat>(g, spec, genus, order);
}

// ---- verify -------------------------------------------------------------

gp::Monomial type_monomial(const gp::PartitionType& t) {
    gp::Monomial m;
    for (const auto& [size, mult] : t.mult) m.powers.emplace_back(gp::var::kappa(size), mult);
    return m;
}

gp::PartitionType monomial_type(const gp::Monomial& m) {
    gp::PartitionType t;
    for (const auto& [id, exp] : m.powers) t.mult[id - 1] = exp;
    return t;
}

// Compares the coefficient of x^n in the symbolic genus-g series against the
// brute-force table for every n <= n_max. Returns the number of mismatches and
// prints the first offending (n, type, genus) with both values.
int verify_against_enumeration(const GlobalOpts& g, int genus, int n_max) {
    gp::CumulantSpec spec;
    spec.mode = gp::WeightMode::symbolic;
    gp::Series<gp::Poly> Z = run_pipeline<gp::Poly>(spec, genus, n_max);

    int mismatches = 0;
    for (int n = 1; n <= n_max; ++n) {
        gp::EnumOptions opt;
        opt.genus = genus;
        opt.budget = g.budget;
        opt.threads = g.threads;
        gp::GenusCountTable table = gp::count_by_genus(n, opt);

        gp::Poly expect;
        for (const auto& [key, count] : table.cells)
            expect += gp::Poly(type_monomial(key.first), gp::Rat(count));
        gp::Poly got = Z.coeff(n);

        if (genus == 0) {
            for (const auto& [key, count] : table.cells) {
                gp::BigInt kw = gp::kreweras_count_big(n, key.first);
                if (kw != gp::BigInt(count)) {
                    std::cout << "MISMATCH vs Kreweras formula at n=" << n << " type "
                              << key.first.str() << ": enumerated " << count << ", formula "
                              << kw << "\n";
                    ++mismatches;
                }
            }
        }
        if (got != expect) {
            gp::Poly diff = got - expect;
            const gp::Monomial& mono = diff.terms().front().first;
            gp::PartitionType bad = monomial_type(mono);
            std::cout << "MISMATCH at n=" << n << " type " << bad.str() << " genus " << genus
                      << ": series " << gp::rat_to_string(got.coeff_of(mono))
                      << ", enumeration " << gp::rat_to_string(expect.coeff_of(mono)) << "\n";
            ++mismatches;
        } else {
            std::cout << "n=" << n << ": ok (" << table.cells.size() << " types, "
                      << table.total() << " partitions)\n";
        }
    }
    return mismatches;
}

// Rebuilds a polynomial in y from [[power, "coeff"], ...] pairs.
gp::Poly poly_from_pairs(const json& pairs) {
    gp::Poly p;
    for (const auto& pair : pairs) {
        int pow = pair.at(0).get<int>();
        gp::Rat c = gp::rat_from_string(pair.at(1).get<std::string>());
        gp::Monomial m = pow == 0 ? gp::Monomial::one() : gp::Monomial::var(gp::var::y, pow);
        p += gp::Poly(m, c);
    }
    return p;
}

int verify_fixture_entry(const json& entry) {
    std::string name = entry.at("name").get<std::string>();
    gp::CumulantSpec spec = gp::CumulantSpec::parse(entry.at("kappa").get<std::string>());
    int genus = entry.at("genus").get<int>();
    int order = entry.at("order").get<int>();

    if (entry.contains("coefficients_y")) {
        gp::Series<gp::Poly> Z = run_pipeline<gp::Poly>(spec, genus, order);
        const json& rows = entry.at("coefficients_y");
        for (int k = 0; k <= order && k < static_cast<int>(rows.size()); ++k) {
            gp::Poly want = poly_from_pairs(rows.at(k));
            if (Z.coeff(k) != want) {
                std::cout << "FIXTURE MISMATCH " << name << " at x^" << k << ": computed "
                          << Z.coeff(k).str() << ", fixture " << want.str() << "\n";
                return 1;
            }
        }
    } else {
        if (genus == 3 && spec.mode != gp::WeightMode::doublets)
            throw std::invalid_argument("genus-3 fixtures are available for doublet weights only");
        gp::Series<gp::Rat> Z = genus == 3 ? gp::genus3_doublet_series(order)
                                           : run_pipeline<gp::Rat>(spec, genus, order);
        const json& rows = entry.at("coefficients");
        for (int k = 0; k <= order && k < static_cast<int>(rows.size()); ++k) {
            gp::Rat want = gp::rat_from_string(rows.at(k).get<std::string>());
            if (Z.coeff(k) != want) {
                std::cout << "FIXTURE MISMATCH " << name << " at x^" << k << ": computed "
                          << gp::rat_to_string(Z.coeff(k)) << ", fixture "
                          << rows.at(k).get<std::string>() << "\n";
                return 1;
            }
        }
    }
    std::cout << "fixture ok: " << name << " (order " << order << ")\n";
    return 0;
}

int cmd_verify(const GlobalOpts& g, int genus, int n_max, const std::string& fixtures) {
    int failures = 0;
    if (!fixtures.empty()) {
        std::ifstream in(fixtures);
        if (!in) throw std::runtime_error("cannot open fixtures file: " + fixtures);
        json doc = json::parse(in);
        for (const auto& entry : doc.at("entries")) failures += verify_fixture_entry(entry);
    } else {
        failures = verify_against_enumeration(g, genus, n_max);
    }
    std::cout << (failures == 0 ? "verify: PASS" : "verify: FAIL") << "\n";
    return failures == 0 ? 0 : 1;
}

// ---- census -------------------------------------------------------------

int cmd_census(const GlobalOpts& g, int genus, int n_min, int n_max) {
    if (genus != 2) throw std::invalid_argument("census supports only genus 2");
    gp::CensusTable table = gp::census_genus2(n_min, n_max, g.budget, g.threads);
    if (g.json_out()) {
        emit(gp::to_json(table));
        return 0;
    }
    std::cout << std::left << std::setw(5) << "n" << std::right << std::setw(10) << "[2^a]"
              << std::setw(12) << "[3 2^a]" << std::setw(14) << "[3^2 2^a] pr"
              << std::setw(14) << "[3^2 2^a] sp" << std::setw(12) << "[4 2^a]"
              << std::setw(10) << "total" << "\n";
    for (const auto& r : table.rows)
        std::cout << std::left << std::setw(5) << r.n << std::right << std::setw(10)
                  << r.two_vertices_only << std::setw(12) << r.one_3vertex << std::setw(14)
                  << r.two_3vertices_prim << std::setw(14) << r.two_3vertices_semiprim
                  << std::setw(12) << r.one_4vertex << std::setw(10) << r.total() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact genus-stratified set-partition toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--budget", g.budget,
                   "max complete partitions the enumerator may visit (0 = unlimited)")
        ->capture_default_str();
    app.add_option("--threads", g.threads, "worker threads for enumeration")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized checks")->capture_default_str();

    std::string genus_text;
    auto* sc_genus =
        app.add_subcommand("genus", "genus and face data of one partition");
    sc_genus->add_option("partition", genus_text, "parts '|'-separated, elements ','-separated")
        ->required();

    EnumerateArgs ea;
    auto* sc_enum = app.add_subcommand("enumerate", "enumerate partitions by type and genus");
    sc_enum->add_option("-n,--n", ea.n, "ground-set size")->required()->check(CLI::PositiveNumber);
    sc_enum->add_option("--type", ea.type, "part-size multiset, e.g. '2^4' or '1^2 3 5'");
    sc_enum->add_option("--genus", ea.genus, "keep only this genus");
    sc_enum->add_flag("--singleton-free", ea.singleton_free, "skip parts of size 1");
    sc_enum->add_option("--class", ea.klass, "all | primitive | semiprimitive")
        ->check(CLI::IsMember({"all", "primitive", "semiprimitive"}))
        ->capture_default_str();
    auto* f_count = sc_enum->add_flag("--count", "print the (type, genus) count table (default)");
    auto* f_list = sc_enum->add_flag("--list", "print every partition");
    auto* f_orbits = sc_enum->add_flag("--orbits", "print rotation orbits with weights");
    f_count->excludes(f_list)->excludes(f_orbits);
    f_list->excludes(f_orbits);

    std::string reduce_text;
    bool reduce_trace = false;
    std::uint64_t confluence_trials = 0;
    auto* sc_reduce = app.add_subcommand("reduce", "reduce a partition to its irreducible form");
    sc_reduce->add_option("partition", reduce_text, "partition text")->required();
    sc_reduce->add_flag("--trace", reduce_trace, "print every reduction step");
    sc_reduce->add_option("--confluence", confluence_trials,
                          "also re-run reduction in N randomized move orders");

    std::string gf_kappa = "ones";
    int gf_genus = 0;
    int gf_order = 20;
    auto* sc_gf = app.add_subcommand("gf", "expand a genus generating function");
    sc_gf->add_option("--genus", gf_genus, "0, 1 or 2")
        ->required()
        ->check(CLI::Range(0, 2));
    sc_gf->add_option("--order", gf_order, "truncation order")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sc_gf->add_option("--kappa", gf_kappa,
                      "ones | y | doublets | triplets | sf-ones | sf-y | symbolic |"
                      " symbolic:2,3 | explicit weights like '2=1,3=1/2'")
        ->capture_default_str();

    int verify_genus = 0;
    int verify_n_max = 9;
    std::string verify_fixtures;
    auto* sc_verify =
        app.add_subcommand("verify", "cross-check series coefficients against brute force");
    sc_verify->add_option("--genus", verify_genus, "0, 1 or 2")->check(CLI::Range(0, 2));
    sc_verify->add_option("--n-max", verify_n_max, "verify all n up to this bound")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sc_verify->add_option("--fixtures", verify_fixtures,
                          "instead compare against a frozen fixtures JSON file");

    int census_genus = 2;
    int census_n_min = 6;
    int census_n_max = 18;
    auto* sc_census = app.add_subcommand("census", "irreducible-diagram census");
    sc_census->add_option("--genus", census_genus, "only 2 is supported")
        ->capture_default_str();
    sc_census->add_option("--n-min", census_n_min)->capture_default_str();
    sc_census->add_option("--n-max", census_n_max)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sc_genus->parsed()) return cmd_genus(g, genus_text);
        if (sc_enum->parsed()) {
            ea.list = f_list->count() > 0;
            ea.orbits = f_orbits->count() > 0;
            return cmd_enumerate(g, ea);
        }
        if (sc_reduce->parsed()) return cmd_reduce(g, reduce_text, reduce_trace, confluence_trials);
        if (sc_gf->parsed()) return cmd_gf(g, gf_kappa, gf_genus, gf_order);
        if (sc_verify->parsed()) return cmd_verify(g, verify_genus, verify_n_max, verify_fixtures);
        if (sc_census->parsed()) return cmd_census(g, census_genus, census_n_min, census_n_max);
    } catch (const gp::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
