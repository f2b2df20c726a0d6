// Command-line front end for the Nakayama algebra library.
//
// Subcommands:
//   analyze       full report on a Kupisch series or Dyck path
//   verify        run exhaustive property suites
//   enumerate     list algebras or paths
//   distribution  statistic tables (gldim / height)
//   bijection     convert between algebras and Dyck paths
//
// Exit codes: 0 success, 1 property violation, 2 parse error, 3 domain error.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <nakayama/nakayama.hpp>

using json = nlohmann::ordered_json;
using namespace nakayama;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;

std::string read_input(const std::string& arg) {
    if (arg != "-") return arg;
    std::string line;
    if (!std::getline(std::cin, line)) throw ParseError("no input on stdin");
    return line;
}

json rational_json(const Rational& r) { return json{{"num", r.num()}, {"den", r.den()}}; }

std::string dim_string(const HomDimension& d) {
    return d.is_infinite() ? "infinite" : std::to_string(d.value());
}

json dim_json(const HomDimension& d) {
    return d.is_infinite() ? json(nullptr) : json(d.value());
}

std::string classification_name(SeriesClass c) {
    switch (c) {
        case SeriesClass::ConnectedLinear: return "connected-linear";
        case SeriesClass::LinearProduct: return "linear-product";
        case SeriesClass::Cyclic: return "cyclic";
        default: return "invalid";
    }
}

json quiver_json(const KupischSeries& a) {
    CycleReport r = cycle_report(a);
    json cycles = json::array();
    for (const auto& c : r.cycles)
        cycles.push_back(json{{"vertices", c.vertices}, {"weight", rational_json(c.weight)}});
    return json{{"successors", build_resolution_quiver(a).successors()},
                {"cycles", cycles},
                {"components", r.component_count}};
}

// ---------------------------------------------------------------- analyze

struct AnalysisReport {
    json data = json::object();
    std::vector<std::pair<std::string, std::string>> human;

    void put(const std::string& key, const json& value, const std::string& text) {
        data[key] = value;
        human.emplace_back(key, text);
    }
};

void analyze_path_into(const DyckPath& d, AnalysisReport& r) {
    std::vector<int> area = area_sequence(d);
    BouncePath b = bounce(d);
    r.put("path", d.word(), d.word().empty() ? "(empty)" : d.word());
    r.put("semilength", d.semilength(), std::to_string(d.semilength()));
    r.put("area", area, format_int_list(area));
    r.put("height", height(d), std::to_string(height(d)));
    r.put("bounce_points", b.bounce_points, format_int_list(b.bounce_points));
    r.put("bounce_count", b.count, std::to_string(b.count));
    r.put("prime_factors", static_cast<int>(prime_factors(d).size()),
          std::to_string(prime_factors(d).size()));
}

AnalysisReport analyze_series(const KupischSeries& a) {
    AnalysisReport r;
    r.put("input", format_series(a), format_series(a));
    r.put("classification", classification_name(classify_series(a.entries())),
          classification_name(classify_series(a.entries())));
    r.put("n", a.size(), std::to_string(a.size()));
    r.put("loewy_length", loewy_length(a), std::to_string(loewy_length(a)));

    HomDimension g = global_dimension(a);
    r.put("gldim", dim_json(g), dim_string(g));

    json pdims = json::array();
    std::string pdim_text = "[";
    for (int i = 0; i < a.size(); ++i) {
        HomDimension d = projective_dimension(a, simple_module(a, i));
        pdims.push_back(dim_json(d));
        if (i) pdim_text += ",";
        pdim_text += dim_string(d);
    }
    pdim_text += "]";
    r.put("pdim", pdims, pdim_text);

    r.put("cokupisch", cokupisch(a), format_int_list(cokupisch(a)));
    r.put("cartan_matrix", cartan_matrix(a).rows(), "");
    r.human.pop_back(); // matrix rows printed separately below
    std::int64_t det = cartan_determinant(a);
    r.put("cartan_determinant", det, std::to_string(det));

    if (det != 0) {
        Rational m = magnitude(a);
        r.put("magnitude", rational_json(m),
              m.den() == 1 ? std::to_string(m.num())
                           : std::to_string(m.num()) + "/" + std::to_string(m.den()));
    } else {
        r.put("magnitude", nullptr, "undefined (singular Cartan matrix)");
    }

    r.put("sincere", is_sincere(a), is_sincere(a) ? "true" : "false");

    if (a.is_cyclic()) {
        CycleReport rep = cycle_report(a);
        std::string text = std::to_string(rep.component_count) + " component(s); cycles:";
        for (const auto& c : rep.cycles) {
            text += " " + format_int_list(c.vertices) + " weight ";
            text += std::to_string(c.weight.num());
            if (c.weight.den() != 1) text += "/" + std::to_string(c.weight.den());
        }
        r.put("resolution_quiver", quiver_json(a), text);
    }

    // attach the Dyck path whenever one of the bijections applies
    if (a.is_connected_linear()) {
        DyckPath d = linear_to_dyck(a);
        r.put("bijection", "linear", "linear");
        analyze_path_into(d, r);
    } else if (a.is_cyclic() && is_sincere(a) && !g.is_infinite()) {
        DyckPath d = sincere_to_dyck(a);
        r.put("bijection", "sincere", "sincere");
        analyze_path_into(d, r);
    }
    return r;
}

AnalysisReport analyze_path(const DyckPath& d) {
    AnalysisReport r;
    r.put("input", d.word(), d.word().empty() ? "(empty)" : d.word());
    r.put("classification", "dyck-path", "dyck-path");
    analyze_path_into(d, r);
    r.put("linear_algebra", format_series(dyck_to_linear(d)), format_series(dyck_to_linear(d)));
    if (d.semilength() >= 1)
        r.put("m1_algebra", format_series(dyck_to_m1(d)), format_series(dyck_to_m1(d)));
    r.put("sincere_algebra", format_series(dyck_to_sincere(d)),
          format_series(dyck_to_sincere(d)));
    return r;
}

void print_report(const AnalysisReport& r, const std::string& format) {
    if (format == "json") {
        std::cout << r.data.dump(2) << "\n";
        return;
    }
    for (const auto& [key, text] : r.human) {
        if (format == "csv") {
            std::cout << key << "," << text << "\n";
        } else {
            std::cout << key << ": " << text << "\n";
        }
    }
    if (format == "human" && r.data.contains("cartan_matrix")) {
        std::cout << "cartan_matrix:\n";
        for (const auto& row : r.data["cartan_matrix"]) {
            std::cout << " ";
            for (const auto& v : row) std::cout << " " << v.get<int>();
            std::cout << "\n";
        }
    }
}

int cmd_analyze(const std::string& raw, const std::string& format) {
    std::string text = read_input(raw);
    // a bare U/D word is a path; bracketed input is a Kupisch series
    bool is_word = !text.empty() &&
                   text.find_first_not_of("UDud \t") == std::string::npos;
    AnalysisReport r = is_word ? analyze_path(parse_path(text))
                               : analyze_series(parse_series(text));
    print_report(r, format);
    return kExitOk;
}

// ----------------------------------------------------------------- verify

struct SuiteResult {
    bool pass = true;
    std::string counterexample;
};

SuiteResult suite_equidistribution(int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        EquidistributionReport r = verify_equidistribution(n);
        if (!r.equal) return {false, "n = " + std::to_string(n)};
    }
    return {};
}

SuiteResult suite_sincere_bounce(int n_max) {
    for (int n = 0; n <= n_max; ++n) {
        SuiteResult res;
        for_each_dyck_path(n, [&](const DyckPath& d) {
            if (!res.pass) return;
            KupischSeries a = dyck_to_sincere(d);
            HomDimension g = global_dimension(a);
            if (g.is_infinite() || g.value() != 2 * bounce(d).count)
                res = {false, format_series(a)};
        });
        if (!res.pass) return res;
    }
    return {};
}

SuiteResult suite_quiver_oracle(int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        SuiteResult res;
        for_each_cyclic(n, 2 * n + 2, [&](const KupischSeries& a) {
            if (!res.pass) return;
            if (finite_gldim_via_quiver(a) != !global_dimension(a).is_infinite())
                res = {false, format_series(a)};
        });
        if (!res.pass) return res;
    }
    return {};
}

SuiteResult suite_m1_count(int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        std::int64_t count = 1; // the linear algebra [n, n-1, ..., 1]
        for_each_cyclic(n, 2 * n - 1, [&](const KupischSeries& a) {
            if (std::count(a.entries().begin(), a.entries().end(), n) == 1) ++count;
        });
        if (count != catalan(n))
            return {false, "n = " + std::to_string(n) + ": " + std::to_string(count) +
                               " != C_n = " + std::to_string(catalan(n))};
    }
    return {};
}

SuiteResult suite_tree_pdim(int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        SuiteResult res;
        for_each_linear_product(n, [&](const std::vector<int>& c) {
            if (!res.pass) return;
            KupischSeries a = KupischSeries::linear(c);
            LabeledTree t = tau(a);
            for (int i = 0; i < n; ++i)
                if (pdim_via_tree(t, i) !=
                    projective_dimension(a, simple_module(a, i)).value())
                    res = {false, format_series(a) + " at simple " + std::to_string(i)};
        });
        if (!res.pass) return res;
    }
    return {};
}

SuiteResult suite_decompositions(int n_max) {
    for (int g = 0; g <= 6; ++g)
        for (int n = 0; n <= n_max; ++n) {
            SuiteResult res;
            for_each_dyck_path(n, [&](const DyckPath& d) {
                if (!res.pass) return;
                if (height(d) <= g + 1 &&
                    recompose_bounded(decompose_bounded(d, g), g) != d)
                    res = {false, "path " + d.word() + " g = " + std::to_string(g)};
                OrderedTree t = dyck_to_tree(d);
                if (sibling_bound_check(t, g) &&
                    !(recompose_tree_bounded(decompose_tree_bounded(t, g)) == t))
                    res = {false, "tree of " + d.word() + " g = " + std::to_string(g)};
            });
            if (!res.pass) return res;
        }
    return {};
}

SuiteResult suite_magnitude(int n_max) {
    auto check = [](const KupischSeries& a) -> bool {
        if (global_dimension(a).is_infinite()) return true;
        Rational m = magnitude(a);
        return m.den() == 1 && m.num() == magnitude_via_ext(a) &&
               m.num() == even_pdim_simple_count(a);
    };
    for (int n = 1; n <= n_max; ++n) {
        SuiteResult res;
        for_each_linear_product(n, [&](const std::vector<int>& c) {
            KupischSeries a = KupischSeries::linear(c);
            if (res.pass && !check(a)) res = {false, format_series(a)};
        });
        if (!res.pass) return res;
        for (const auto& a : enumerate_cyclic_finite_gldim(n))
            if (!check(a)) return {false, format_series(a)};
    }
    return {};
}

int cmd_verify(const std::string& suite, int n, bool has_n) {
    struct Entry {
        std::string name;
        int default_n;
        SuiteResult (*run)(int);
    };
    const std::vector<Entry> suites = {
        {"equidistribution", 10, suite_equidistribution},
        {"sincere-bounce", 9, suite_sincere_bounce},
        {"quiver-oracle", 7, suite_quiver_oracle},
        {"m1-count", 8, suite_m1_count},
        {"tree-pdim", 9, suite_tree_pdim},
        {"decompositions", 8, suite_decompositions},
        {"magnitude", 6, suite_magnitude},
    };

    bool any_fail = false;
    bool matched = false;
    for (const auto& e : suites) {
        if (suite != "all" && suite != e.name) continue;
        matched = true;
        int cap = has_n ? n : e.default_n;
        auto start = std::chrono::steady_clock::now();
        SuiteResult res = e.run(cap);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << e.name << " (n <= " << cap << "): "
                  << (res.pass ? "PASS" : "FAIL") << " [" << ms << " ms]\n";
        if (!res.pass) {
            std::cout << "  counterexample: " << res.counterexample << "\n";
            any_fail = true;
        }
    }
    if (!matched) {
        std::cerr << "unknown suite: " << suite << "\n";
        return kExitParse;
    }
    return any_fail ? kExitViolation : kExitOk;
}

// -------------------------------------------------------------- enumerate

int cmd_enumerate(const std::string& what, int n, int max_entry,
                  const std::string& format) {
    std::vector<std::string> items;
    if (what == "linear") {
        for (const auto& a : enumerate_connected_linear(n)) items.push_back(format_series(a));
    } else if (what == "products") {
        for (const auto& a : enumerate_linear_products(n)) items.push_back(format_series(a));
    } else if (what == "cyclic") {
        int cap = max_entry > 0 ? max_entry : 2 * n - 1;
        for (const auto& a : enumerate_cyclic(n, cap)) items.push_back(format_series(a));
    } else if (what == "cyclic-finite") {
        for (const auto& a : enumerate_cyclic_finite_gldim(n)) items.push_back(format_series(a));
    } else if (what == "dyck") {
        for (const auto& d : enumerate_dyck_paths(n))
            items.push_back(d.word().empty() ? "(empty)" : d.word());
    } else {
        std::cerr << "unknown enumeration: " << what << "\n";
        return kExitParse;
    }

    if (format == "json") {
        std::cout << json{{"kind", what}, {"n", n}, {"count", items.size()},
                          {"items", items}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& s : items) std::cout << s << "\n";
        if (format == "human") std::cout << "total: " << items.size() << "\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------ distribution

int cmd_distribution(const std::string& stat, int n, const std::string& format) {
    Distribution dist;
    if (stat == "gldim") {
        dist = gldim_distribution(n);
    } else if (stat == "height") {
        dist = height_distribution(n);
    } else {
        std::cerr << "unknown statistic: " << stat << "\n";
        return kExitParse;
    }

    if (format == "json") {
        json counts = json::object();
        for (const auto& [v, c] : dist.counts) counts[std::to_string(v)] = c;
        std::cout << json{{"statistic", dist.statistic}, {"n", n},
                          {"total", dist.total}, {"counts", counts}}
                         .dump(2)
                  << "\n";
    } else if (format == "csv") {
        std::cout << "value,count\n";
        for (const auto& [v, c] : dist.counts) std::cout << v << "," << c << "\n";
    } else {
        std::string out = "{";
        bool first = true;
        for (const auto& [v, c] : dist.counts) {
            if (!first) out += ", ";
            first = false;
            out += std::to_string(v) + ":" + std::to_string(c);
        }
        out += "}";
        std::cout << out << "\n";
    }
    return kExitOk;
}

// -------------------------------------------------------------- bijection

int cmd_bijection(const std::string& kind, const std::string& from_dyck,
                  const std::string& to_dyck, const std::string& format) {
    if (from_dyck.empty() == to_dyck.empty()) {
        std::cerr << "pass exactly one of --from-dyck or --to-dyck\n";
        return kExitParse;
    }

    KupischSeries algebra = KupischSeries::linear({1});
    DyckPath path("");
    if (!from_dyck.empty()) {
        path = parse_path(read_input(from_dyck));
        if (kind == "linear") algebra = dyck_to_linear(path);
        else if (kind == "m1") algebra = dyck_to_m1(path);
        else if (kind == "sincere") algebra = dyck_to_sincere(path);
        else { std::cerr << "unknown bijection: " << kind << "\n"; return kExitParse; }
    } else {
        algebra = parse_series(read_input(to_dyck));
        if (kind == "linear") path = linear_to_dyck(algebra);
        else if (kind == "m1") path = m1_to_dyck(algebra);
        else if (kind == "sincere") path = sincere_to_dyck(algebra);
        else { std::cerr << "unknown bijection: " << kind << "\n"; return kExitParse; }
    }

    if (format == "json") {
        std::cout << json{{"bijection", kind},
                          {"series", format_series(algebra)},
                          {"path", path.word()},
                          {"area", area_sequence(path)}}
                         .dump(2)
                  << "\n";
    } else if (!from_dyck.empty()) {
        std::cout << format_series(algebra) << "\n";
    } else {
        std::cout << (path.word().empty() ? "(empty)" : path.word()) << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nakayama algebras via Kupisch series: homological invariants, "
                 "Dyck paths, trees, and bijections"};
    app.require_subcommand(1);

    std::string format = "human";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}));

    std::string input;
    auto* analyze = app.add_subcommand("analyze", "report on a series or path");
    analyze->add_option("input", input, "Kupisch series, area sequence, U/D word, or -")
        ->required();

    std::string suite = "all";
    int verify_n = 0;
    auto* verify = app.add_subcommand("verify", "run exhaustive property suites");
    verify->add_option("--suite", suite, "suite name or 'all'");
    auto* verify_n_opt = verify->add_option("--n", verify_n, "size cap");

    std::string enum_what;
    int enum_n = 0;
    int max_entry = 0;
    auto* enumerate = app.add_subcommand("enumerate", "list algebras or paths");
    enumerate->add_option("what", enum_what, "linear|products|cyclic|cyclic-finite|dyck")
        ->required();
    enumerate->add_option("--n", enum_n, "number of simples / semilength")->required();
    enumerate->add_option("--max-entry", max_entry, "entry cap for cyclic series");

    std::string stat;
    int dist_n = 0;
    auto* distribution = app.add_subcommand("distribution", "statistic tables");
    distribution->add_option("statistic", stat, "gldim|height")->required();
    distribution->add_option("--n", dist_n, "number of simples")->required();

    std::string kind, from_dyck, to_dyck;
    auto* bijection = app.add_subcommand("bijection", "algebra <-> Dyck path");
    bijection->add_option("kind", kind, "linear|m1|sincere")->required();
    bijection->add_option("--from-dyck", from_dyck, "path to convert to an algebra");
    bijection->add_option("--to-dyck", to_dyck, "series to convert to a path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return cmd_analyze(input, format);
        if (*verify) return cmd_verify(suite, verify_n, verify_n_opt->count() > 0);
        if (*enumerate) return cmd_enumerate(enum_what, enum_n, max_entry, format);
        if (*distribution) return cmd_distribution(stat, dist_n, format);
        if (*bijection) return cmd_bijection(kind, from_dyck, to_dyck, format);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NotM1& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const NotSincereFinite& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
