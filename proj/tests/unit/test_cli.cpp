#include <doctest.h>

#include "cli.hpp"
#include "golden_runner.hpp"

using optics::cli::run;

namespace {

const std::string kData = OPTICS_DATA_DIR;

}  // namespace

TEST_CASE("golden outputs") {
    const auto results = testsupport::run_golden(OPTICS_GOLDEN_DIR, kData);
    CHECK(results.size() >= 30);
    for (const auto& r : results) {
        INFO(r.input.name);
        CHECK(r.have_expected);
        CHECK(r.outcome.exit_code == r.input.exit_code);
        CHECK(r.outcome.out == r.expected_out);
        // Failures say why on stderr; successes keep stderr empty.
        CHECK((r.outcome.exit_code == 0) == r.outcome.err.empty());
    }
}

TEST_CASE("diagnostics name the problem") {
    const auto neg = run({"matrix", kData + "/negative_index.sys"});
    CHECK(neg.err.find("0 < n") != std::string::npos);
    const auto bad = run({"matrix", kData + "/malformed.sys"});
    CHECK(bad.err.find("malformed.sys:2:16: parse error: expected d=") != std::string::npos);
    const auto tir = run({"interface", "--n1", "1.5", "--n2", "1", "--theta", "60"});
    CHECK(tir.err.find("total internal reflection") != std::string::npos);
    CHECK(tir.out.empty());
}

TEST_CASE("hand-computed values appear in the output") {
    CHECK(run({"matrix", kData + "/minimal.sys"}).out == "1 2\n0 1\ndet 1\n");
    const auto trace = run({"trace", kData + "/minimal.sys", "--y0", "1", "--theta0", "0.1", "--format", "csv"});
    CHECK(trace.out == "index,y,theta\n0,1,0.1\n1,1.2,0.1\n");
    const auto stab = run({"stability", kData + "/fp_d0.5.sys"});
    CHECK(stab.out.find("half_trace -0.5\nverdict stable\n") != std::string::npos);
    CHECK(run({"stability", kData + "/fp_d1.sys"}).out.find("verdict marginal") != std::string::npos);
    const auto unstable = run({"stability", kData + "/fp_d2.5.sys", "--oracle"});
    CHECK(unstable.out.find("verdict unstable") != std::string::npos);
    CHECK(unstable.out.find("oracle_diverged true") != std::string::npos);
    CHECK(unstable.out.find("oracle_agreement agree") != std::string::npos);
    const auto waist = run({"beam", kData + "/identity.sys", "--lambda", "1e-6", "--R", "inf", "--w", "1e-3"});
    CHECK(waist.out.find("q_out re=0 im=3.14159265359\nR=inf\nw=0.001\n") != std::string::npos);
    const auto normal = run({"interface", "--n1", "1", "--n2", "1.5", "--theta", "0"});
    CHECK(normal.out.find("theta_t_deg 0\nr_a 0.2\nt_a 1.2\n") == 0);
    CHECK(run({"quantum", "--omega", "2.5"}).out.find("ground_energy 1.25\n") == 0);
    CHECK(run({"quantum", "--omega", "1"}).out.find("eigenvalues 0.5 1.5 2.5 3.5 4.5 5.5 6.5 7.5\n") !=
          std::string::npos);
}

TEST_CASE("identical invocations are byte-identical") {
    const std::vector<std::string> args{"interface", "--n1", "1", "--n2", "1.7", "--theta", "33", "--seed", "5"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.exit_code == b.exit_code);
}

TEST_CASE("help goes to stdout with exit 0") {
    const auto help = run({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("stability") != std::string::npos);
    CHECK(run({"beam", "--help"}).out.find("--q-re") != std::string::npos);
}
