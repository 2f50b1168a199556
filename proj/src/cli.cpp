#include "rsic/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rsic/algorithms.hpp"
#include "rsic/analysis.hpp"
#include "rsic/generators.hpp"
#include "rsic/io.hpp"
#include "rsic/optimal.hpp"
#include "rsic/report.hpp"
#include "rsic/suites.hpp"

namespace rsic {

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parseRationalOption(const std::string& name, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError("--" + name + ": " + e.what());
    }
}

void emit(const Json& doc, const std::string& outPath, std::ostream& out) {
    if (outPath.empty()) {
        out << doc.dump(2) << '\n';
        return;
    }
    std::ofstream file(outPath);
    if (!file) throw UsageError("cannot write " + outPath);
    file << doc.dump(2) << '\n';
}

std::shared_ptr<const Instance> loadValidInstance(const std::string& path, std::ostream& err) {
    auto instance = std::make_shared<const Instance>(readInstanceFile(path));
    const auto violations = validate(*instance);
    if (!violations.empty()) {
        for (const auto& v : violations) err << "job " << *v.index << ": " << v.rule << ": " << v.message << '\n';
        throw UsageError("invalid instance " + path);
    }
    return instance;
}

Schedule loadCertificate(const std::string& path, std::shared_ptr<const Instance> instance) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open certificate " + path);
    return scheduleFromJson(nlohmann::json::parse(in), std::move(instance));
}

AlgorithmTrace runAlgorithm(const std::string& alg, std::shared_ptr<const Instance> instance) {
    if (alg == "nextfit") return nextFit(std::move(instance));
    if (alg == "firstfit") return firstFit(std::move(instance));
    throw UsageError("unknown algorithm '" + alg + "'");
}

class Stopwatch {
public:
    [[nodiscard]] double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void stamp(Json& doc, bool timing, const Stopwatch& clock) {
    if (!timing) return;
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << clock.seconds();
    doc["wallSeconds"] = s.str();
}

struct GenArgs {
    std::string family;
    std::int64_t k = 6;
    std::int64_t l = 4;
    std::int64_t nemesisN = 3;
    std::int64_t n = 8;
    std::string t = "1/2";
    std::string delta;
    std::uint64_t seed = 1;
    std::int64_t sizeGrid = 12;
    std::string duration = "1";
    std::string startGrid = "1/4";
    std::string horizon = "8";
    std::string out;
    std::string certificate;
};

int cmdGen(const GenArgs& a, std::ostream& out) {
    GeneratorSpec spec;
    spec.family = parseFamily(a.family);
    spec.params.k = a.k;
    spec.params.l = a.l;
    spec.params.nemesisN = a.nemesisN;
    spec.params.n = a.n;
    spec.params.t = parseRationalOption("t", a.t);
    if (!a.delta.empty()) spec.params.delta = parseRationalOption("delta", a.delta);
    spec.params.seed = a.seed;
    spec.params.sizeGrid = a.sizeGrid;
    spec.params.duration = parseRationalOption("duration", a.duration);
    spec.params.startGrid = parseRationalOption("start-grid", a.startGrid);
    spec.params.horizon = parseRationalOption("horizon", a.horizon);

    GeneratedInstance gen;
    try {
        gen = generate(spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const std::string header = "family " + std::string(familyName(spec.family)) + ", " +
                               std::to_string(gen.instance.size()) + " jobs";
    if (a.out.empty()) {
        writeInstance(out, gen.instance, header);
    } else {
        writeInstanceFile(a.out, gen.instance, header);
    }
    if (gen.certificate) {
        std::string certPath = a.certificate;
        if (certPath.empty() && !a.out.empty()) certPath = a.out + ".cert.json";
        if (!certPath.empty()) {
            std::ofstream cert(certPath);
            if (!cert) throw UsageError("cannot write " + certPath);
            cert << scheduleToJson(*gen.certificate).dump(2) << '\n';
        }
    }
    return 0;
}

struct RunArgs {
    std::string alg;
    std::string in;
    std::string out;
    bool timing = false;
};

int cmdRun(const RunArgs& a, const std::string& echo, std::ostream& out, std::ostream& err) {
    Stopwatch clock;
    auto instance = loadValidInstance(a.in, err);
    const auto trace = runAlgorithm(a.alg, instance);
    const auto bounds = lowerBounds(*instance);
    Json doc{{"command", echo},
             {"instance", instanceDigest(*instance)},
             {"algorithm", a.alg},
             {"result", toJson(trace)},
             {"lowerBounds", {{"util", toJson(bounds.utilBound)}, {"span", toJson(bounds.spanBound)}}},
             {"ratioVsLowerBound",
              bounds.best().sign() > 0 ? toJson(ratioReport(cost(trace.schedule), bounds.best(), RatioKind::lowerBound))
                                       : Json(nullptr)}};
    stamp(doc, a.timing, clock);
    emit(doc, a.out, out);
    return 0;
}

struct OptArgs {
    std::string in;
    std::size_t maxJobs = kDefaultBruteForceLimit;
    std::string certificate;
    std::string out;
    bool timing = false;
};

int cmdOpt(const OptArgs& a, const std::string& echo, std::ostream& out, std::ostream& err) {
    Stopwatch clock;
    auto instance = loadValidInstance(a.in, err);
    const auto bounds = lowerBounds(*instance);
    Json doc{{"command", echo},
             {"instance", instanceDigest(*instance)},
             {"lowerBounds", {{"util", toJson(bounds.utilBound)}, {"span", toJson(bounds.spanBound)}}}};
    int code = 0;
    if (instance->size() <= a.maxJobs) {
        doc["opt"] = toJson(bruteForceOpt(instance, a.maxJobs));
    } else {
        doc["opt"] = nullptr;
        doc["note"] = "instance exceeds brute-force limit " + std::to_string(a.maxJobs);
    }
    if (!a.certificate.empty()) {
        const Schedule cert = loadCertificate(a.certificate, instance);
        try {
            doc["certificate"] = {{"valid", true}, {"cost", toJson(verifyCertificate(*instance, cert))}};
        } catch (const CertificateError& e) {
            doc["certificate"] = {{"valid", false}, {"error", e.what()}};
            err << e.what() << '\n';
            code = kExitFail;
        }
    }
    stamp(doc, a.timing, clock);
    emit(doc, a.out, out);
    return code;
}

struct VerifyArgs {
    std::string suite;
    SuiteOptions options;
    bool noGgu = false;
    std::string counterexample;
    std::string out;
    bool summary = false;
    bool timing = false;
};

int cmdVerify(VerifyArgs a, const std::string& echo, std::ostream& out, std::ostream& err) {
    Stopwatch clock;
    a.options.includeGgu = !a.noGgu;
    SuiteResult result;
    try {
        result = runSuite(a.suite, a.options);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::string cexPath;
    if (result.counterexample) {
        cexPath = a.counterexample.empty() ? a.suite + "-counterexample.txt" : a.counterexample;
        writeInstanceFile(cexPath, *result.counterexample,
                          "counterexample for suite " + a.suite + " (seed " + std::to_string(a.options.seed) +
                              ")\n" + result.counterexampleNote);
        err << "counterexample written to " << cexPath << '\n';
    }
    if (a.summary) {
        out << std::left << std::setw(14) << "suite" << std::setw(10) << "trials" << std::setw(10) << "failures"
            << "result\n";
        out << std::left << std::setw(14) << result.suite << std::setw(10) << result.trials << std::setw(10)
            << result.failures << (result.pass ? "PASS" : "FAIL") << '\n';
        out << "seed " << a.options.seed << '\n';
    } else {
        Json doc{{"command", echo}, {"verification", toJson(result)}};
        if (!cexPath.empty()) doc["counterexampleFile"] = cexPath;
        stamp(doc, a.timing, clock);
        emit(doc, a.out, out);
    }
    return result.pass ? 0 : kExitFail;
}

struct RatioArgs {
    std::string algCost;
    std::string opt;
    std::string kind = "exactOpt";
    std::string in;
    std::string alg = "firstfit";
    std::string certificate;
    std::size_t maxJobs = kDefaultBruteForceLimit;
    std::string out;
};

RatioKind parseKind(const std::string& kind) {
    for (RatioKind k : {RatioKind::exactOpt, RatioKind::certificateUpper, RatioKind::lowerBound}) {
        if (ratioKindName(k) == kind) return k;
    }
    throw UsageError("unknown ratio kind '" + kind + "'");
}

int cmdRatio(const RatioArgs& a, const std::string& echo, std::ostream& out, std::ostream& err) {
    Json doc{{"command", echo}};
    Rational alg;
    Rational opt;
    RatioKind kind;
    if (!a.in.empty()) {
        auto instance = loadValidInstance(a.in, err);
        alg = cost(runAlgorithm(a.alg, instance).schedule);
        if (instance->size() <= a.maxJobs) {
            opt = bruteForceOpt(instance, a.maxJobs).bestCost;
            kind = RatioKind::exactOpt;
        } else if (!a.certificate.empty()) {
            opt = verifyCertificate(*instance, loadCertificate(a.certificate, instance));
            kind = RatioKind::certificateUpper;
        } else {
            opt = lowerBounds(*instance).best();
            kind = RatioKind::lowerBound;
        }
        doc["algorithm"] = a.alg;
    } else {
        if (a.algCost.empty() || a.opt.empty()) throw UsageError("ratio needs --in, or both --alg-cost and --opt");
        alg = parseRationalOption("alg-cost", a.algCost);
        opt = parseRationalOption("opt", a.opt);
        kind = parseKind(a.kind);
    }
    try {
        doc["algCost"] = toJson(alg);
        doc["opt"] = toJson(opt);
        doc["ratio"] = toJson(ratioReport(alg, opt, kind));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    emit(doc, a.out, out);
    return 0;
}

}  // namespace

int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Renting servers in the cloud: online algorithms, instances and verification suites", "rsic"};
    app.require_subcommand(1);

    std::string echo;
    for (int i = 1; i < argc; ++i) echo += (i > 1 ? " " : "") + std::string(argv[i]);

    GenArgs gen;
    auto* genCmd = app.add_subcommand("gen", "Generate an instance file");
    genCmd->add_option("--family", gen.family, "ggu | long-uniform | nf-nemesis | random-two-arrival | random-equal-duration")
        ->required();
    genCmd->add_option("--k", gen.k, "GGU groups / long-uniform servers");
    genCmd->add_option("--l", gen.l, "long-uniform last arrival time (even)");
    genCmd->add_option("--N", gen.nemesisN, "nf-nemesis parameter");
    genCmd->add_option("--n", gen.n, "random families: job count");
    genCmd->add_option("--t", gen.t, "second arrival time, p/q");
    genCmd->add_option("--delta", gen.delta, "GGU perturbation, p/q (default 18^-k/1000)");
    genCmd->add_option("--seed", gen.seed, "random families: seed");
    genCmd->add_option("--size-grid", gen.sizeGrid, "random families: sizes on {1/D..D/D}");
    genCmd->add_option("--duration", gen.duration, "random-equal-duration: job duration");
    genCmd->add_option("--start-grid", gen.startGrid, "random-equal-duration: start spacing");
    genCmd->add_option("--horizon", gen.horizon, "random-equal-duration: starts below this");
    genCmd->add_option("--out", gen.out, "instance file (stdout if omitted)");
    genCmd->add_option("--certificate", gen.certificate, "certificate file for ggu (default <out>.cert.json)");

    RunArgs run;
    auto* runCmd = app.add_subcommand("run", "Run NextFit or FirstFit on an instance file");
    runCmd->add_option("--alg", run.alg, "nextfit | firstfit")->required();
    runCmd->add_option("--in", run.in, "instance file")->required();
    runCmd->add_option("--out", run.out, "report file (stdout if omitted)");
    runCmd->add_flag("--timing", run.timing, "include wall time in the report");

    OptArgs opt;
    auto* optCmd = app.add_subcommand("opt", "Brute-force OPT, lower bounds and certificate checks");
    optCmd->add_option("--in", opt.in, "instance file")->required();
    optCmd->add_option("--max-jobs", opt.maxJobs, "brute-force job limit");
    optCmd->add_option("--certificate", opt.certificate, "schedule JSON to verify as an OPT upper bound");
    optCmd->add_option("--out", opt.out, "report file (stdout if omitted)");
    optCmd->add_flag("--timing", opt.timing, "include wall time in the report");

    VerifyArgs verify;
    auto* verifyCmd = app.add_subcommand("verify", "Run a property suite");
    verifyCmd->add_option("--suite", verify.suite, "nextfit-2t | strict-ff-2 | weights | layers | recurrence")
        ->required();
    verifyCmd->add_option("--trials", verify.options.trials, "random trials");
    verifyCmd->add_option("--seed", verify.options.seed, "base seed");
    verifyCmd->add_option("--max-jobs", verify.options.maxJobs, "jobs per random instance");
    verifyCmd->add_option("--n", verify.options.n, "recurrence length");
    verifyCmd->add_option("--k", verify.options.ks, "layers: k values")->delimiter(',');
    verifyCmd->add_option("--l", verify.options.ls, "layers: l values")->delimiter(',');
    verifyCmd->add_flag("--no-ggu", verify.noGgu, "weights: skip the GGU-extended case");
    verifyCmd->add_option("--counterexample", verify.counterexample, "where to write a failing instance");
    verifyCmd->add_option("--out", verify.out, "report file (stdout if omitted)");
    verifyCmd->add_flag("--summary", verify.summary, "print a pass/fail table instead of JSON");
    verifyCmd->add_flag("--timing", verify.timing, "include wall time in the report");

    RatioArgs ratio;
    auto* ratioCmd = app.add_subcommand("ratio", "ALG/OPT ratio with its direction");
    ratioCmd->add_option("--alg-cost", ratio.algCost, "algorithm cost, p/q");
    ratioCmd->add_option("--opt", ratio.opt, "OPT cost or bound, p/q");
    ratioCmd->add_option("--kind", ratio.kind, "exactOpt | certificateUpper | lowerBound");
    ratioCmd->add_option("--in", ratio.in, "instance file; computes both sides");
    ratioCmd->add_option("--alg", ratio.alg, "nextfit | firstfit (with --in)");
    ratioCmd->add_option("--certificate", ratio.certificate, "certificate for instances beyond brute force");
    ratioCmd->add_option("--max-jobs", ratio.maxJobs, "brute-force job limit");
    ratioCmd->add_option("--out", ratio.out, "report file (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : kExitUsage;
    }

    try {
        if (*genCmd) return cmdGen(gen, out);
        if (*runCmd) return cmdRun(run, echo, out, err);
        if (*optCmd) return cmdOpt(opt, echo, out, err);
        if (*verifyCmd) return cmdVerify(verify, echo, out, err);
        if (*ratioCmd) return cmdRatio(ratio, echo, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace rsic
