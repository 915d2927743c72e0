// End-to-end checks of the command line front end: exit codes, flat
// key=value config files and flag precedence. The binary path arrives as
// argv[1]; every command runs through std::system with captured streams.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

std::string g_cli;
fs::path g_dir;

std::string slurp(const fs::path& p) {
    std::ifstream is(p);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

fs::path write_file(const std::string& name, const std::string& body) {
    const fs::path p = g_dir / name;
    std::ofstream(p) << body;
    return p;
}

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out = g_dir / ("out" + std::to_string(counter) + ".txt");
    const fs::path err = g_dir / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd =
        g_cli + " " + args + " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

bool has_line(const std::string& text, const std::string& line) {
    return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("config file alone satisfies required options") {
    const fs::path cfg = write_file("vf.conf", "tau=0.5\nsamples=8\n");
    const RunResult r = run_cli("verify-frame --config " + cfg.string());
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "tau: 0.5"));
    CHECK(has_line(r.out, "samples: 8"));
    CHECK(has_line(r.out, "verdict: pass"));
}

TEST_CASE("explicit flags win over config values") {
    const fs::path cfg = write_file("vf_override.conf", "tau=0.5\nsamples=8\n");
    const RunResult r = run_cli("verify-frame --tau 1 --config " + cfg.string());
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "tau: 1"));
    CHECK(has_line(r.out, "samples: 8"));

    // --config=FILE spelling behaves the same
    const RunResult r2 = run_cli("verify-frame --config=" + cfg.string() + " --samples 4");
    CHECK(r2.code == 0);
    CHECK(has_line(r2.out, "tau: 0.5"));
    CHECK(has_line(r2.out, "samples: 4"));
}

TEST_CASE("config files tolerate comments, blanks, spacing and quotes") {
    const fs::path rep = g_dir / "vf_report.txt";
    const fs::path cfg = write_file("vf_loose.conf",
                                    "# frame check\n"
                                    "\n"
                                    "tau = 0.25\n"
                                    "; four samples are plenty here\n"
                                    "samples = 4\n"
                                    "out = \"" + rep.string() + "\"\n");
    const RunResult r = run_cli("verify-frame --config " + cfg.string());
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(has_line(slurp(rep), "tau: 0.25"));
}

TEST_CASE("malformed config files exit 2 with a located message") {
    const fs::path unknown = write_file("bad_key.conf", "tau=0.5\nbogus=1\n");
    RunResult r = run_cli("verify-frame --config " + unknown.string());
    CHECK(r.code == 2);
    CHECK(r.err.find("no option --bogus") != std::string::npos);

    const fs::path section = write_file("bad_section.conf", "[verify-frame]\ntau=0.5\n");
    r = run_cli("verify-frame --config " + section.string());
    CHECK(r.code == 2);
    CHECK(r.err.find("sections are not supported") != std::string::npos);

    const fs::path dup = write_file("bad_dup.conf", "tau=0.5\ntau=1\n");
    r = run_cli("verify-frame --config " + dup.string());
    CHECK(r.code == 2);
    CHECK(r.err.find("duplicate key") != std::string::npos);

    const fs::path noeq = write_file("bad_noeq.conf", "tau 0.5\n");
    r = run_cli("verify-frame --config " + noeq.string());
    CHECK(r.code == 2);
    CHECK(r.err.find("expected key=value") != std::string::npos);

    r = run_cli("verify-frame --config " + (g_dir / "missing.conf").string());
    CHECK(r.code == 2);
    CHECK(r.err.find("cannot open config file") != std::string::npos);

    const fs::path nan = write_file("bad_value.conf", "tau=not_a_number\n");
    r = run_cli("verify-frame --config " + nan.string());
    CHECK(r.code == 2);
}

TEST_CASE("config placement and arity errors exit 2") {
    const fs::path cfg = write_file("vf_place.conf", "tau=0.5\n");
    RunResult r = run_cli("--config " + cfg.string());
    CHECK(r.code == 2);
    CHECK(r.err.find("needs a subcommand") != std::string::npos);

    r = run_cli("verify-frame --tau 0.5 --config");
    CHECK(r.code == 2);
    CHECK(r.err.find("needs a file path") != std::string::npos);

    r = run_cli("verify-frame --config " + cfg.string() + " --config " + cfg.string());
    CHECK(r.code == 2);
    CHECK(r.err.find("at most one") != std::string::npos);
}

TEST_CASE("boolean config keys toggle flags") {
    // the reflected barrier is not minimal, so the gate decides the outcome
    const std::string body =
        "tau = 0.5\nfamily = barriers\nlo = 3.5\nhi = 24\nsteps = 3\n"
        "family-radius = 10\nfamily-grid = 12x24\nsurface = reflected_barrier\n"
        "c = 5\nsigma = 0.4\nsurface-radius = 8\nsurface-grid = 12x24\n"
        "t-max = 1.0\nno-minimality-check = ";
    const fs::path on = write_file("sweep_gate_on.conf", body + "false\n");
    RunResult r = run_cli("sweep --config " + on.string());
    CHECK(r.code == 1);
    CHECK(r.err.find("minimality gate") != std::string::npos);

    const fs::path off = write_file("sweep_gate_off.conf", body + "true\n");
    r = run_cli("sweep --config " + off.string());
    CHECK(r.code == 0);
    CHECK(r.out.find("classification:") != std::string::npos);
}

TEST_CASE("usage errors exit 2, failures exit 1, help exits 0") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("verify-frame").code == 2);
    CHECK(run_cli("verify-frame --tau -1").code == 2);
    CHECK(run_cli("certify --c 2 --tau 0.5").code == 2);  // c below c0(tau)
    CHECK(run_cli("mesh --surface barrier --tau 0.5 --c 4 --format tiff").code == 2);

    const RunResult help = run_cli("--help");
    CHECK(help.code == 0);
    CHECK(help.out.find("Usage") != std::string::npos);
    const RunResult sub = run_cli("sweep --help");
    CHECK(sub.code == 0);
    CHECK(sub.out.find("--config") != std::string::npos);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <nil3 binary> [doctest args]\n", argv[0]);
        return 1;
    }
    g_cli = argv[1];
    g_dir = fs::temp_directory_path() / "nil3-cli-tests";
    fs::create_directories(g_dir);
    doctest::Context ctx(argc - 1, argv + 1);
    return ctx.run();
}
