// qcert: per-parameter non-rationality certificates for the S6-symmetric
// quartic pencil. `qcert verify --t 1 --format json` prints one certificate;
// `qcert report` runs the default sample plus the special parameters.

#include "qc/certificate.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

std::vector<qc::Rat> default_sample() {
    std::vector<qc::Rat> ts{qc::Rat(1), qc::Rat(3), qc::Rat(-1), qc::Rat(5), qc::Rat(7, 3)};
    if (const char* env = std::getenv("QC_DEFAULT_SAMPLE")) {
        std::vector<qc::Rat> out;
        std::string s(env);
        size_t pos = 0;
        while (pos <= s.size()) {
            size_t comma = s.find(',', pos);
            std::string item = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
            if (!item.empty()) out.push_back(qc::Rat::parse(item));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (!out.empty()) return out;
    }
    return ts;
}

std::vector<qc::Rat> special_parameters() {
    return {qc::Rat(2), qc::Rat(6), qc::Rat(10, 7)};
}

struct RunResult {
    std::vector<qc::Certificate> certs;
    std::vector<double> millis;
    bool all_expected = true;
};

RunResult run_all(const std::vector<qc::Rat>& ts) {
    RunResult r;
    for (const qc::Rat& t : ts) {
        auto t0 = std::chrono::steady_clock::now();
        qc::Certificate cert = qc::run_certificate(t);
        auto t1 = std::chrono::steady_clock::now();
        r.millis.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        if (cert.verdict != qc::expected_verdict(t)) r.all_expected = false;
        r.certs.push_back(std::move(cert));
    }
    return r;
}

void print_report(const RunResult& r, const std::string& format, bool timings) {
    if (format == "json") {
        if (r.certs.size() == 1) {
            std::cout << qc::to_json(r.certs[0]).dump(2) << "\n";
        } else {
            qc::Json arr = qc::Json::array();
            for (const qc::Certificate& c : r.certs) arr.push_back(qc::to_json(c));
            std::cout << arr.dump(2) << "\n";
        }
    } else {
        for (size_t i = 0; i < r.certs.size(); ++i) {
            if (i) std::cout << "\n";
            std::cout << qc::render_text(r.certs[i]);
        }
    }
    if (timings) {
        std::cerr << "--- timings ---\n";
        for (size_t i = 0; i < r.certs.size(); ++i)
            std::cerr << "t=" << r.certs[i].t.to_string() << ": " << r.millis[i] << " ms\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact non-rationality certificates for the S6-symmetric quartic threefolds"};
    app.require_subcommand(1);

    std::vector<std::string> t_args;
    bool sample = false, special = false, timings = false;
    std::string format = "text";

    CLI::App* verify = app.add_subcommand("verify", "verify selected parameter values");
    verify->add_option("--t", t_args, "parameter value t as a rational, e.g. 1 or 7/3")
        ->take_all();
    verify->add_flag("--sample", sample, "verify the default generic sample");
    verify->add_flag("--special", special, "verify the special parameters 2, 6, 10/7");
    verify->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--timings", timings, "print per-certificate timings to stderr");

    CLI::App* report = app.add_subcommand("report", "verify the sample and special parameters");
    report->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    report->add_flag("--timings", timings, "print per-certificate timings to stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::vector<qc::Rat> ts;
    try {
        if (verify->parsed()) {
            for (const std::string& s : t_args) ts.push_back(qc::Rat::parse(s));
            if (sample)
                for (const qc::Rat& t : default_sample()) ts.push_back(t);
            if (special)
                for (const qc::Rat& t : special_parameters()) ts.push_back(t);
            if (ts.empty()) {
                std::cerr << "verify: pass --t <rational>, --sample, or --special\n";
                return 2;
            }
        } else {
            for (const qc::Rat& t : default_sample()) ts.push_back(t);
            for (const qc::Rat& t : special_parameters()) ts.push_back(t);
        }
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    RunResult r = run_all(ts);
    print_report(r, format, timings);
    return r.all_expected ? 0 : 1;
}
