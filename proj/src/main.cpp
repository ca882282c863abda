// petinduce command-line front end: run inductions from JSON, render
// partitions to SVG, execute and verify the golden-ratio renormalization
// chain, expose orbit codings, and run the continued-fraction driver.
//
// Exit codes: 0 success, 1 failed verification / other runtime error,
// 2 parse error, 3 induction did not terminate, 4 geometry invariant
// violation.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "petinduce/errors.hpp"
#include "petinduce/field.hpp"
#include "petinduce/induction.hpp"
#include "petinduce/json_io.hpp"
#include "petinduce/pipeline.hpp"
#include "petinduce/svg.hpp"

namespace {

using namespace petinduce;

std::vector<FieldElem> parse_csv_field(const std::string& s) {
    std::vector<FieldElem> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(FieldElem::parse(item));
    return out;
}

HalfSpace<2> parse_halfspace2(const std::string& s) {
    auto v = parse_csv_field(s);
    if (v.size() != 3) throw ParseError("halfspace: expected 3 comma-separated field elements");
    return {{v[0], v[1], v[2]}};
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot open output file " + out_path);
    out << content;
}

std::string data_dir_default() {
    if (const char* env = std::getenv("PETINDUCE_DATA")) return env;
#ifdef PETINDUCE_DATA_DIR
    return PETINDUCE_DATA_DIR;
#else
    return "data";
#endif
}

ExpectedTables load_expected_tables(const std::string& dir) {
    json j = load_json_file(dir + "/expected_tables.json");
    ExpectedTables t;
    for (const auto& [name, m] : j.at("betas").items()) t.betas[name] = morphism_from_json(m);
    t.tau = permutation_from_json(j.at("tau"));
    t.zeta = permutation_from_json(j.at("zeta"));
    t.self_similarity = morphism_from_json(j.at("self_similarity"));
    t.omega_u = morphism_from_json(j.at("omega_u"));
    return t;
}

int cmd_induce(const std::string& pet_file, const std::string& partition_file,
               const std::string& halfspace, const std::string& orientation, long max_iter,
               const std::string& out_path, const std::string& format) {
    Pet<2> t = pet_from_json<2>(load_json_file(pet_file));
    LabeledPartition<2> p = partition_from_json<2>(load_json_file(partition_file));
    Direction dir = orientation == "column" ? Direction::column : Direction::row;
    InductionResult<2> result = induced_partition(t, parse_halfspace2(halfspace), p, dir, max_iter);
    if (format == "svg") {
        write_output(out_path, render_svg(result.induced_partition));
    } else if (format == "text") {
        std::ostringstream os;
        for (const auto& [b, w] : result.substitution) {
            os << b << " ->";
            for (int a : w) os << ' ' << a;
            os << '\n';
        }
        write_output(out_path, os.str());
    } else {
        write_output(out_path, to_json<2>(result).dump(1) + "\n");
    }
    return 0;
}

int cmd_render(const std::string& partition_file, const std::string& out_path) {
    LabeledPartition<2> p = partition_from_json<2>(load_json_file(partition_file));
    write_output(out_path, render_svg(p));
    return 0;
}

int cmd_orbit(const std::string& pet1_file, const std::string& pet2_file,
              const std::string& partition_file, const std::string& point,
              const std::string& window, const std::string& out_path) {
    Pet<2> t1 = pet_from_json<2>(load_json_file(pet1_file));
    Pet<2> t2 = pet_from_json<2>(load_json_file(pet2_file));
    LabeledPartition<2> p = partition_from_json<2>(load_json_file(partition_file));
    auto coords = parse_csv_field(point);
    if (coords.size() != 2) throw ParseError("point: expected 2 comma-separated field elements");
    std::vector<long> w;
    {
        std::stringstream ss(window);
        std::string item;
        while (std::getline(ss, item, ',')) w.push_back(std::stol(item));
    }
    if (w.size() != 4) throw ParseError("window: expected lo1,hi1,lo2,hi2");
    auto grid = code_config(t1, t2, p, {coords[0], coords[1]}, w[0], w[1], w[2], w[3]);
    json j = json{{"window", w}, {"labels", grid}};
    write_output(out_path, j.dump(1) + "\n");
    return 0;
}

int cmd_sturmian(const std::string& alpha_str, int steps, const std::string& out_path) {
    FieldElem alpha = FieldElem::parse(alpha_str);
    SturmianResult r = sturmian_chain(alpha, steps);
    json morphs = json::array();
    for (const auto& m : r.morphisms) morphs.push_back(to_json(m));
    json j = json{{"alpha", alpha.str()}, {"digits", r.digits}, {"morphisms", morphs}};
    write_output(out_path, j.dump(1) + "\n");
    return 0;
}

int cmd_jr_verify(const std::string& data_dir, bool skip_shear, unsigned long seed,
                  long max_iter) {
    LabeledPartition<2> p0 = partition_from_json<2>(load_json_file(data_dir + "/p0.json"));
    ExpectedTables expected = load_expected_tables(data_dir);
    ChainRecord rec = run_chain(p0, max_iter);
    VerifyReport report = verify_chain(rec, expected);
    for (const auto& [name, ok] : report.tables)
        std::cout << (ok ? "PASS " : "FAIL ") << name << '\n';

    Morphism2D self_sim = self_similarity_morphism(rec);
    int wp = 0, we = 0;
    bool prim = self_sim.is_primitive(0, &wp);
    bool expa = self_sim.is_expansive(20, 10, &we);
    std::cout << "check self-similarity primitive: " << (prim ? "ok" : "NO")
              << " (witness m=" << wp << ")\n";
    std::cout << "check self-similarity expansive: " << (expa ? "ok" : "NO")
              << " (witness m=" << we << ")\n";
    if (!skip_shear) {
        std::mt19937_64 rng(seed);
        bool shear = verify_shear(rec, 20, 5, rng);
        std::cout << "check shear relation: " << (shear ? "ok" : "NO") << '\n';
    }
    if (!report.all_pass) {
        for (const auto& [name, ok] : report.tables)
            if (!ok) {
                std::cerr << "verification failed at table " << name << '\n';
                return 1;
            }
    }
    if (!prim || !expa) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact polytope exchange transformations and Rauzy induction"};
    app.require_subcommand(1);

    std::string pet_file, pet2_file, partition_file, halfspace, out_path;
    std::string orientation = "row", format = "json";
    std::string point, window = "0,4,0,4";
    std::string data_dir = data_dir_default();
    std::string alpha_str;
    long max_iter = 10000;
    unsigned long seed = 0;
    int steps = 7;
    bool skip_shear = false;

    auto* induce = app.add_subcommand("induce", "Induce a partition on a half-space window");
    induce->add_option("--pet", pet_file, "PET JSON file")->required();
    induce->add_option("--partition", partition_file, "partition JSON file")->required();
    induce->add_option("--halfspace", halfspace, "v0,v1,v2 with v0+v1*x+v2*y >= 0")->required();
    induce->add_option("--orientation", orientation, "row|column");
    induce->add_option("--max-iter", max_iter, "induction iteration cap");
    induce->add_option("--out", out_path, "output file (default stdout)");
    induce->add_option("--format", format, "json|text|svg");

    auto* render = app.add_subcommand("render", "Render a partition as SVG");
    render->add_option("--partition", partition_file, "partition JSON file")->required();
    render->add_option("--out", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("jr-verify", "Run and verify the renormalization chain");
    verify->add_option("--data", data_dir, "data directory (default $PETINDUCE_DATA)");
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_option("--max-iter", max_iter, "induction iteration cap");
    verify->add_flag("--skip-shear", skip_shear, "skip the pointwise shear check");

    auto* sturmian = app.add_subcommand("sturmian", "Continued-fraction driver");
    sturmian->add_option("alpha", alpha_str, "field element, e.g. 186/55+3/55*phi")->required();
    sturmian->add_option("steps", steps, "number of digits");
    sturmian->add_option("--out", out_path, "output file (default stdout)");

    auto* orbit = app.add_subcommand("orbit", "Code an orbit window for a point");
    orbit->add_option("--pet1", pet_file, "first generator PET JSON")->required();
    orbit->add_option("--pet2", pet2_file, "second generator PET JSON")->required();
    orbit->add_option("--partition", partition_file, "partition JSON file")->required();
    orbit->add_option("--point", point, "x,y field elements")->required();
    orbit->add_option("--window", window, "lo1,hi1,lo2,hi2");
    orbit->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (induce->parsed())
            return cmd_induce(pet_file, partition_file, halfspace, orientation, max_iter, out_path,
                              format);
        if (render->parsed()) return cmd_render(partition_file, out_path);
        if (verify->parsed()) return cmd_jr_verify(data_dir, skip_shear, seed, max_iter);
        if (sturmian->parsed()) return cmd_sturmian(alpha_str, steps, out_path);
        if (orbit->parsed())
            return cmd_orbit(pet_file, pet2_file, partition_file, point, window, out_path);
    } catch (const petinduce::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const petinduce::NonTerminating& e) {
        std::cerr << "induction did not terminate: " << e.what() << '\n';
        return 3;
    } catch (const petinduce::GeometryError& e) {
        std::cerr << "geometry invariant violation: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
