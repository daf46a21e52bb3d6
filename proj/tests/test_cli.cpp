// End-to-end checks of the i1 binary: exact outputs, error kinds, exit
// codes, and byte determinism. The binary path arrives as argv[1].
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

int g_failures = 0;
std::string g_bin;

struct Result {
    int exit_code;
    std::string out;
};

Result run(const std::string& args) {
    const std::string cmd = g_bin + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        std::cerr << "popen failed for: " << cmd << "\n";
        std::exit(2);
    }
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void expect(const std::string& args, int code, const std::string& exact_out) {
    Result r = run(args);
    std::string want = exact_out + "\n";
    if (r.exit_code != code || r.out != want) {
        ++g_failures;
        std::cerr << "FAIL: i1 " << args << "\n  want exit " << code << " out " << exact_out
                  << "\n  got  exit " << r.exit_code << " out " << r.out;
    }
}

void expect_error(const std::string& args, int code, const std::string& kind) {
    Result r = run(args);
    const std::string needle = "{\"error\":\"" + kind + "\"";
    if (r.exit_code != code || r.out.find(needle) != 0) {
        ++g_failures;
        std::cerr << "FAIL: i1 " << args << "\n  want exit " << code << " error " << kind
                  << "\n  got  exit " << r.exit_code << " out " << r.out;
    }
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream f(path);
    f << body;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-i1>\n";
        return 2;
    }
    g_bin = argv[1];

    // normalization and quotient
    expect("normalize \"Int*D\"", 0, R"({"towers":{"0":["1"]},"f":[[0,0,"-1"]]})");
    expect("normalize \"D*Int\"", 0, R"({"towers":{"0":["1"]},"f":[]})");
    expect("normalize \"x\"", 0, R"({"towers":{"1":["-1","1"]},"f":[]})");
    expect("normalize \"[H,Int] - Int\"", 0, R"({"towers":{},"f":[]})");
    expect("pi \"Int*D\"", 0, R"({"0":["1"]})");
    expect("pi \"e(3,4)\"", 0, R"({})");

    // degree, determinant, units
    expect("degf \"e(2,5)\"", 0, R"({"degf":5})");
    expect("degf \"H\"", 0, R"({"degf":-1})");
    expect("det \"1 - e(0,0)\"", 0, R"({"det":"0"})");
    expect("det \"one\"", 0, R"({"det":"1"})");
    expect_error("det \"H\"", 1, "NotOnePlusF");
    expect("is-unit \"2*one + 2*e(0,1)\"", 0,
           R"({"is_unit":true,"inverse":{"towers":{"0":["1/2"]},"f":[[0,1,"-1/2"]]}})");
    expect_error("is-unit \"1 - e(0,0)\"", 1, "NotAUnit");
    expect_error("is-unit \"Int\"", 1, "NotAUnit");

    // action, kernels, index
    expect("index \"D^3\"", 0, R"({"index":3,"kernel":[{"0":"1"},{"1":"1"},{"2":"1"}]})");
    expect("index \"Int\"", 0, R"({"index":-1,"kernel":[]})");
    expect("kernel \"D\"", 0, R"({"kernel":[{"0":"1"}]})");
    expect_error("index \"e(0,0)\"", 1, "ElementOfF");
    expect_error("kernel \"0\"", 1, "ZeroOperator");
    expect("apply \"H\" \"x^2/2\"", 0, R"({"divided":{"2":"3"},"monomial":{"2":"3/2"}})");
    expect("apply \"D\" \"1\"", 0, R"({"divided":{},"monomial":{}})");
    expect("centralizer-dim \"H\" 3", 0, R"({"dim":4})");
    expect("centralizer-dim \"e(0,0)\" 1", 0, R"({"dim":2})");

    // the truncation cap comes from the environment
    {
        Result r = run("index \"D\"");
        if (r.exit_code != 0) {
            ++g_failures;
            std::cerr << "FAIL: index D with default cap\n";
        }
        const std::string saved = g_bin;
        g_bin = "I1_TRUNC_CAP=4 " + saved;
        expect_error("index \"D\"", 1, "NotStabilized");
        g_bin = saved;
    }

    // ad eigenvalues on graded weights
    expect("ad-eigenvalue \"H\" -- -1", 0, R"({"eigenvalue":"-1"})");
    expect("ad-eigenvalue \"H\" 1", 0, R"({"eigenvalue":"1"})");
    expect("ad-eigenvalue \"H^2\" 1", 0, R"({"eigenvalue":null})");
    expect_error("ad-eigenvalue \"H\" 0", 1, "InvalidComponent");
    expect_error("ad-eigenvalue \"D\" 1", 2, "DialectError");

    // sigma_n family
    expect("sigma-n 2 \"H\"", 0, R"({"0":["0","1/2"]})");
    expect("sigma-n 2 \"D\"", 0, R"({"2":["1"]})");
    expect("sigma-n-preimage 2 \"D\" 6", 0, R"({"preimage":null})");
    expect("sigma-n-preimage 3 \"D\" 6", 0, R"({"preimage":null})");
    expect("sigma-n-preimage 2 \"D^2\" 3", 0, R"({"preimage":{"1":["1"]}})");

    // endomorphism files
    const std::string dir = "/tmp/i1_cli_test";
    if (std::system(("mkdir -p " + dir).c_str()) != 0) {
        std::cerr << "cannot create " << dir << "\n";
        return 2;
    }
    write_file(dir + "/id.json",
               R"({"H": {"towers":{"0":["0","1"]},"f":[]}, "int": {"towers":{"1":["1"]},"f":[]}, "der": {"towers":{"-1":["1"]},"f":[]}})");
    write_file(dir + "/swapped.json",
               R"({"H": {"towers":{"0":["0","1"]},"f":[]}, "int": {"towers":{"-1":["1"]},"f":[]}, "der": {"towers":{"1":["1"]},"f":[]}})");
    write_file(dir + "/t2.json",
               R"({"H": {"towers":{"0":["0","1"]},"f":[]}, "int": {"towers":{"1":["2"]},"f":[]}, "der": {"towers":{"-1":["1/2"]},"f":[]}})");
    write_file(dir + "/garbage.json", "{not json");
    expect("check-endo " + dir + "/id.json", 0, R"({"valid":true})");
    expect_error("check-endo " + dir + "/swapped.json", 1, "RelationViolated");
    expect_error("check-endo " + dir + "/missing.json", 2, "SyntaxError");
    expect_error("check-endo " + dir + "/garbage.json", 2, "SyntaxError");
    expect("decompose " + dir + "/t2.json", 0,
           R"({"nu":"2","u":[],"diagnostics":{"lambda":"1","mu":"0","n":1,"s":2,"kernel_der_deg":0}})");

    // syntax / dialect errors exit 2
    expect_error("normalize \"D *\"", 2, "SyntaxError");
    expect_error("normalize \"Dinv\"", 2, "DialectError");
    expect_error("sigma-n 2 \"e(0,0)\"", 2, "DialectError");
    expect_error("apply \"H\" \"H\"", 2, "DialectError");

    // byte determinism across runs
    for (const char* args : {"normalize \"Int^2 * D^2 + e(0,1)/3\"", "index \"D^2\"",
                             "decompose /tmp/i1_cli_test/t2.json"}) {
        Result a = run(args), b = run(args);
        if (a.out != b.out || a.exit_code != b.exit_code) {
            ++g_failures;
            std::cerr << "FAIL: nondeterministic output for " << args << "\n";
        }
    }

    // seeded self-check subcommand
    {
        Result r = run("fuzz --seed 7 --count 40");
        if (r.exit_code != 0 || r.out.find("\"failures\":0") == std::string::npos) {
            ++g_failures;
            std::cerr << "FAIL: fuzz subcommand\n  got " << r.out;
        }
        Result r2 = run("fuzz --seed 7 --count 40");
        if (r.out != r2.out) {
            ++g_failures;
            std::cerr << "FAIL: fuzz not deterministic for a fixed seed\n";
        }
    }

    if (g_failures == 0) {
        std::cout << "test_cli: all checks passed\n";
        return 0;
    }
    std::cerr << "test_cli: " << g_failures << " failure(s)\n";
    return 1;
}
