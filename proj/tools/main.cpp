#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "revolve/cloud_io.hpp"
#include "revolve/format.hpp"
#include "revolve/ifs.hpp"
#include "revolve/revrep.hpp"
#include "revolve/sequence.hpp"
#include "revolve/series.hpp"
#include "revolve/verify.hpp"

namespace {

using namespace revolve;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw std::runtime_error("cannot open " + out_path + " for writing");
    }
    out << text;
    if (!out) {
        throw std::runtime_error("write failed for " + out_path);
    }
}

Condition parse_condition(const std::string& name) {
    if (name == "grc") return Condition::grc;
    if (name == "src") return Condition::src;
    if (name == "trc") return Condition::trc;
    throw std::invalid_argument("unknown condition \"" + name + "\" (expected grc|src|trc)");
}

FirstDigitPolicy parse_policy(const std::string& name) {
    if (name == "free") return FirstDigitPolicy::free;
    if (name == "one") return FirstDigitPolicy::must_be_one;
    throw std::invalid_argument("unknown policy \"" + name + "\" (expected free|one)");
}

struct Options {
    std::string theta;
    std::string alpha;
    std::string beta;
    std::string family;
    std::string condition;
    std::string policy = "free";
    std::string word;
    std::string out;
    std::string preset_name;
    std::string ifs_file;
    std::string method = "orbit";
    std::string check;
    std::string mode = "binary";
    std::string input;
    std::string viewport;
    std::string gaussian;
    std::size_t length = 0;
    std::size_t depth = 0;
    std::size_t seq_depth = 0;
    std::size_t ifs_depth = 0;
    std::size_t width = 512;
    std::size_t height = 512;
    std::size_t max_len = 16;
    std::uint64_t iterations = 100000;
    std::uint64_t burn_in = 100;
    std::uint64_t seed = 0;
    double tol = -1.0;
    std::vector<std::size_t> depths;
    std::vector<std::size_t> lengths;
};

FamilyParams build_params(const Options& opt) {
    FamilyParams p;
    p.alpha = parse_complex(opt.alpha);
    if (!opt.beta.empty()) {
        p.beta = parse_complex(opt.beta);
    }
    p.angle = Angle::parse(opt.theta);
    return p;
}

Ifs build_ifs(const Options& opt) {
    if (!opt.preset_name.empty() && !opt.ifs_file.empty()) {
        throw std::invalid_argument("give either --preset or --ifs-file, not both");
    }
    if (!opt.preset_name.empty()) {
        return preset(parse_preset(opt.preset_name));
    }
    if (!opt.ifs_file.empty()) {
        std::ifstream in(opt.ifs_file);
        if (!in) {
            throw std::runtime_error("cannot open " + opt.ifs_file);
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_ifs(buf.str());
    }
    throw std::invalid_argument("an IFS is required: --preset or --ifs-file");
}

int run_enumerate(const Options& opt) {
    const Angle angle = Angle::parse(opt.theta);
    std::string text;
    for_each_word(parse_condition(opt.condition), angle, opt.length, parse_policy(opt.policy),
                  [&](std::span<const Digit> word) {
                      text += format_word(RevolvingSequence(angle, {word.begin(), word.end()}));
                      text += '\n';
                  });
    emit(text, opt.out);
    return 0;
}

int run_evaluate(const Options& opt) {
    const Family family = parse_family(opt.family);
    const FamilyParams params = build_params(opt);
    const RevolvingSequence word = parse_word(opt.word, params.angle);
    emit(format_complex(eval_family_series(family, params, word)) + "\n", opt.out);
    return 0;
}

int run_cloud(const Options& opt) {
    const Family family = parse_family(opt.family);
    const PointCloud cloud = make_cloud(family, build_params(opt), opt.depth);
    emit(write_csv(cloud), opt.out);
    return 0;
}

int run_attract(const Options& opt) {
    const Ifs system = build_ifs(opt);
    PointCloud cloud;
    if (opt.method == "orbit") {
        cloud = orbit_depth(system, {0.0, 0.0}, opt.depth);
    } else if (opt.method == "williams") {
        cloud = williams_cloud(system, opt.depth);
    } else if (opt.method == "chaos") {
        cloud = chaos_game(system, opt.iterations, opt.seed, opt.burn_in);
    } else {
        throw std::invalid_argument("unknown method \"" + opt.method +
                                    "\" (expected orbit|chaos|williams)");
    }
    emit(write_csv(cloud), opt.out);
    return 0;
}

int run_verify(const Options& opt) {
    VerifyReport report;
    if (opt.check == "set-equation") {
        const double tol = opt.tol >= 0.0 ? opt.tol : 1e-10;
        report = check_set_equation(parse_family(opt.family), build_params(opt), opt.depth, tol);
    } else if (opt.check == "scaling") {
        const double tol = opt.tol >= 0.0 ? opt.tol : 1e-10;
        report = check_scaling(build_params(opt), opt.depth, tol);
    } else if (opt.check == "rotation-union") {
        const double tol = opt.tol >= 0.0 ? opt.tol : 1e-10;
        report = check_rotation_union(parse_family(opt.family), build_params(opt), opt.depth, tol);
    } else if (opt.check == "convergence") {
        if (opt.depths.empty()) {
            throw std::invalid_argument("convergence check needs --depths");
        }
        report = check_convergence(parse_family(opt.family), build_params(opt), opt.depths);
    } else if (opt.check == "cross-representation") {
        const FamilyParams params = build_params(opt);
        const std::size_t n = opt.seq_depth > 0 ? opt.seq_depth : opt.depth;
        const std::size_t m = opt.ifs_depth > 0 ? opt.ifs_depth : opt.depth;
        const double tol = opt.tol >= 0.0 ? opt.tol : cross_representation_bound(params, n, m);
        report = check_cross_representation(parse_family(opt.family), params, n, m, tol);
    } else if (opt.check == "counts") {
        if (opt.lengths.empty()) {
            throw std::invalid_argument("counts check needs --lengths");
        }
        report = count_check(parse_condition(opt.condition), Angle::parse(opt.theta), opt.lengths);
    } else {
        throw std::invalid_argument("unknown check \"" + opt.check + "\"");
    }
    emit(report.serialize(), opt.out);
    return report.pass ? 0 : 1;
}

int run_render(const Options& opt) {
    const PointCloud cloud = read_csv_file(opt.input);
    Viewport view;
    if (!opt.viewport.empty()) {
        std::vector<double> vals;
        std::size_t start = 0;
        while (start <= opt.viewport.size()) {
            const std::size_t comma = opt.viewport.find(',', start);
            vals.push_back(parse_double(std::string_view(opt.viewport).substr(
                start, comma == std::string::npos ? comma : comma - start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (vals.size() != 4) {
            throw std::invalid_argument("--viewport needs min_re,max_re,min_im,max_im");
        }
        view = Viewport{vals[0], vals[1], vals[2], vals[3], opt.width, opt.height};
    } else {
        view = auto_viewport(cloud, opt.width, opt.height);
    }
    RenderMode mode;
    if (opt.mode == "binary") {
        mode = RenderMode::binary;
    } else if (opt.mode == "log" || opt.mode == "log_density") {
        mode = RenderMode::log_density;
    } else {
        throw std::invalid_argument("unknown mode \"" + opt.mode + "\" (expected binary|log)");
    }
    emit(render_pgm(cloud, view, mode), opt.out);
    return 0;
}

int run_encode(const Options& opt) {
    const GaussianInt z = parse_gaussian(opt.gaussian);
    const auto word = encode(z, opt.max_len, parse_policy(opt.policy));
    if (!word) {
        std::cerr << "no representation of " << format_gaussian(z) << " within length "
                  << opt.max_len << "\n";
        return 1;
    }
    emit(format_word(*word) + "\n", opt.out);
    return 0;
}

int run_decode(const Options& opt) {
    const RevolvingSequence word = parse_word(opt.word, revrep_angle());
    emit(format_gaussian(decode(word)) + "\n", opt.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"revolving-sequence parametrizations of dragon attractors"};
    app.require_subcommand(1);
    Options opt;

    auto* enumerate_cmd = app.add_subcommand("enumerate", "list valid digit words of one length");
    enumerate_cmd->add_option("--condition", opt.condition, "grc|src|trc")->required();
    enumerate_cmd->add_option("--theta", opt.theta, "signed fraction of a full turn, e.g. -1/4")->required();
    enumerate_cmd->add_option("--length", opt.length, "word length")->required();
    enumerate_cmd->add_option("--policy", opt.policy, "free|one (default free)");
    enumerate_cmd->add_option("--out", opt.out, "output path (default stdout)");

    auto* evaluate_cmd = app.add_subcommand("evaluate", "evaluate a family series on one digit word");
    evaluate_cmd->add_option("--family", opt.family, "x1|x|h1|h|x2_1|x2|h2_1|h2|t1|t")->required();
    evaluate_cmd->add_option("--alpha", opt.alpha, "re,im")->required();
    evaluate_cmd->add_option("--beta", opt.beta, "re,im (t families)");
    evaluate_cmd->add_option("--theta", opt.theta, "signed fraction of a full turn")->required();
    evaluate_cmd->add_option("--word", opt.word, "digit word, e.g. 0,z,1");
    evaluate_cmd->add_option("--out", opt.out, "output path (default stdout)");

    auto* cloud_cmd = app.add_subcommand("cloud", "emit a family point cloud as CSV");
    cloud_cmd->add_option("--family", opt.family, "family tag")->required();
    cloud_cmd->add_option("--alpha", opt.alpha, "re,im")->required();
    cloud_cmd->add_option("--beta", opt.beta, "re,im (t families)");
    cloud_cmd->add_option("--theta", opt.theta, "signed fraction of a full turn")->required();
    cloud_cmd->add_option("--depth", opt.depth, "word length")->required();
    cloud_cmd->add_option("--out", opt.out, "output path (default stdout)");

    auto* attract_cmd = app.add_subcommand("attract", "approximate an IFS attractor as CSV");
    attract_cmd->add_option("--preset", opt.preset_name, "levy|tiling|heighway|twindragon|terdragon");
    attract_cmd->add_option("--ifs-file", opt.ifs_file, "custom maps, one a_re,a_im,c_re,c_im,conj per line");
    attract_cmd->add_option("--method", opt.method, "orbit|chaos|williams (default orbit)");
    attract_cmd->add_option("--depth", opt.depth, "composition depth (orbit/williams)");
    attract_cmd->add_option("--iterations", opt.iterations, "chaos iterations (default 100000)");
    attract_cmd->add_option("--burn-in", opt.burn_in, "chaos burn-in (default 100)");
    attract_cmd->add_option("--seed", opt.seed, "chaos RNG seed (default 0)");
    attract_cmd->add_option("--out", opt.out, "output path (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "machine-check one identity; exit 0 pass, 1 fail");
    verify_cmd
        ->add_option("--check", opt.check,
                     "set-equation|scaling|rotation-union|convergence|cross-representation|counts")
        ->required();
    verify_cmd->add_option("--family", opt.family, "family tag");
    verify_cmd->add_option("--alpha", opt.alpha, "re,im");
    verify_cmd->add_option("--beta", opt.beta, "re,im");
    verify_cmd->add_option("--theta", opt.theta, "signed fraction of a full turn");
    verify_cmd->add_option("--depth", opt.depth, "truncation depth");
    verify_cmd->add_option("--seq-depth", opt.seq_depth, "sequence-side depth (cross-representation)");
    verify_cmd->add_option("--ifs-depth", opt.ifs_depth, "IFS-side depth (cross-representation)");
    verify_cmd->add_option("--depths", opt.depths, "increasing depth list (convergence)");
    verify_cmd->add_option("--lengths", opt.lengths, "length list (counts)");
    verify_cmd->add_option("--condition", opt.condition, "grc|src|trc (counts)");
    verify_cmd->add_option("--tol", opt.tol, "tolerance (default per check)");
    verify_cmd->add_option("--out", opt.out, "output path (default stdout)");

    auto* render_cmd = app.add_subcommand("render", "rasterize a CSV cloud to plain PGM");
    render_cmd->add_option("--in", opt.input, "input CSV path")->required();
    render_cmd->add_option("--out", opt.out, "output path (default stdout)");
    render_cmd->add_option("--viewport", opt.viewport, "min_re,max_re,min_im,max_im (default: auto)");
    render_cmd->add_option("--width", opt.width, "pixels (default 512)");
    render_cmd->add_option("--height", opt.height, "pixels (default 512)");
    render_cmd->add_option("--mode", opt.mode, "binary|log (default binary)");

    auto* revrep_cmd = app.add_subcommand("revrep", "base-(1+i) revolving representations");
    revrep_cmd->require_subcommand(1);
    auto* encode_cmd = revrep_cmd->add_subcommand("encode", "Gaussian integer to digit word");
    encode_cmd->add_option("gaussian", opt.gaussian, "x,y")->required();
    encode_cmd->add_option("--max-len", opt.max_len, "search bound (default 16)");
    encode_cmd->add_option("--policy", opt.policy, "free|one (default free)");
    encode_cmd->add_option("--out", opt.out, "output path (default stdout)");
    auto* decode_cmd = revrep_cmd->add_subcommand("decode", "digit word to Gaussian integer");
    decode_cmd->add_option("word", opt.word, "digit word, e.g. 0,1")->required();
    decode_cmd->add_option("--out", opt.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(enumerate_cmd)) return run_enumerate(opt);
        if (app.got_subcommand(evaluate_cmd)) return run_evaluate(opt);
        if (app.got_subcommand(cloud_cmd)) return run_cloud(opt);
        if (app.got_subcommand(attract_cmd)) return run_attract(opt);
        if (app.got_subcommand(verify_cmd)) return run_verify(opt);
        if (app.got_subcommand(render_cmd)) return run_render(opt);
        if (app.got_subcommand(revrep_cmd)) {
            if (revrep_cmd->got_subcommand(encode_cmd)) return run_encode(opt);
            return run_decode(opt);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
