#include "celestial/acceptance.hpp"
#include "celestial/classify/report.hpp"
#include "celestial/errors.hpp"
#include "celestial/fixtures.hpp"
#include "celestial/implicitize.hpp"
#include "celestial/mesh.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

using namespace celestial;

namespace {

Fixture load_fixture(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read fixture file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_fixture(ss.str(), std::filesystem::path(path).stem().string());
}

// 1: bad input or unmet precondition, 2: degenerate or unsupported surface
int run_guarded(const std::function<int()>& body)
{
    try {
        return body();
    } catch (const DegenerateError& e) {
        std::string msg = e.what();
        std::cerr << "error: " << (msg.rfind("degenerate surface", 0) == 0 ? "" : "degenerate surface: ") << msg
                  << "\n";
        return 2;
    } catch (const UnsupportedError& e) {
        std::cerr << "error: unsupported: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"celestial surfaces in the three-sphere"};
    app.require_subcommand(1);

    auto* classify = app.add_subcommand("classify", "classify a fixture and print the JSON report");
    std::string fixture_path;
    std::optional<int> max_degree;
    std::optional<std::uint64_t> seed;
    classify->add_option("fixture", fixture_path, "fixture JSON file")->required();
    classify->add_option("--max-degree", max_degree, "implicitization degree bound")->check(CLI::Range(2, 64));
    classify->add_option("--seed", seed, "seed for generic choices");

    auto* verify = app.add_subcommand("verify", "run the acceptance checks on the built-in fixtures");
    std::optional<std::string> fault;
    verify->add_option("--inject-fault", fault, "corrupt the named built-in fixture (test hook)");

    auto* mesh = app.add_subcommand("mesh", "write an OBJ mesh of the stereographic projection");
    std::string mesh_fixture, out_path;
    int res = 64;
    double hole = 1e-3;
    mesh->add_option("fixture", mesh_fixture, "fixture JSON file")->required();
    mesh->add_option("--res", res, "grid resolution, at least 8");
    mesh->add_option("-o,--output", out_path, "output path")->required();
    mesh->add_option("--hole", hole, "samples with |y0| below this fraction of |y| become holes");

    auto* exportf = app.add_subcommand("export", "print a built-in fixture as JSON");
    std::string builtin;
    exportf->add_option("name", builtin, "built-in fixture name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (*classify)
        return run_guarded([&] {
            Fixture f = load_fixture(fixture_path);
            if (max_degree)
                f.max_degree = *max_degree;
            if (seed)
                f.seed = *seed;
            auto r = classify_celestial(f);
            std::cout << to_json(r) << "\n";
            return r.expectation_diffs.empty() ? 0 : 3;
        });

    if (*verify)
        return run_guarded([&] {
            auto rs = run_acceptance({fault});
            std::cout << format_results(rs);
            return all_pass(rs) ? 0 : 3;
        });

    if (*mesh)
        return run_guarded([&] {
            if (res < 8)
                throw InputError("--res must be at least 8");
            Fixture f = load_fixture(mesh_fixture);
            auto pi = implicit_equation(synthesize(f), Projection::pi, f.max_degree, f.center, f.name);
            auto m = sample_mesh(f, pi, res, hole);
            std::ofstream out(out_path, std::ios::binary);
            if (!out)
                throw InputError("cannot write '" + out_path + "'");
            out << to_obj(m, f.name + " stereographic projection, degree " + std::to_string(pi.degree));
            out.close();
            if (!out)
                throw InputError("cannot write '" + out_path + "'");
            std::cerr << m.vertices.size() << " vertices, " << m.faces.size() << " faces, " << m.holes.size()
                      << " holes, max relative residual " << m.max_residual << "\n";
            return m.max_residual <= 1e-6 ? 0 : 3;
        });

    if (*exportf)
        return run_guarded([&] {
            std::cout << fixture_to_json(builtin_fixture(builtin));
            return 0;
        });
    return 1;
}
