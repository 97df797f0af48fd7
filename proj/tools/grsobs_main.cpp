#include "grsobs/error.hpp"
#include "grsobs/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using grsobs::Error;
using grsobs::Int;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io", "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_compute(const std::string& pd_path, const std::string& goeritz_text, bool pretty) {
    grsobs::grs::ObstructionReport report = [&] {
        if (!pd_path.empty()) {
            std::string name = std::filesystem::path(pd_path).stem().string();
            return grsobs::grs::obstruction(grsobs::diagram::parse_pd(read_file(pd_path)),
                                            name);
        }
        return grsobs::grs::obstruction(grsobs::report::parse_matrix_text(goeritz_text),
                                        "goeritz");
    }();
    if (pretty)
        std::cout << grsobs::report::report_to_pretty(report);
    else
        std::cout << grsobs::report::report_to_json(report) << "\n";
    return 0;
}

struct BatchLine {
    std::string text;     // serialized output line
    std::string verdict;  // verdict name, "error", or ""
    bool mismatch = false;
    bool error = false;
};

BatchLine process_record(const std::string& line, const std::string& format, bool verify) {
    BatchLine out;
    std::string name = "?";
    try {
        grsobs::report::KnotRecord rec = grsobs::report::knot_record_from_json(line);
        name = rec.name;
        grsobs::grs::ObstructionReport rep = grsobs::report::compute_record(rec);
        out.verdict = grsobs::grs::verdict_name(rep.verdict);
        std::string verify_note;
        if (verify && rec.expected) {
            std::string why;
            if (!grsobs::report::expected_matches(rep, *rec.expected, &why)) {
                out.mismatch = true;
                verify_note = "mismatch: " + why;
            } else {
                verify_note = "match";
            }
        }
        if (format == "csv") {
            out.text = grsobs::report::report_to_csv_row(rep);
        } else {
            std::string j = grsobs::report::report_to_json(rep);
            if (!verify_note.empty()) {
                // splice the verify field into the stable JSON object
                nlohmann::json jj = nlohmann::json::parse(j);
                jj["verify"] = verify_note;
                j = jj.dump();
            }
            out.text = j;
        }
    } catch (const Error& e) {
        out.error = true;
        out.verdict = "error";
        if (format == "csv")
            out.text = name + ",,error,";
        else
            out.text = nlohmann::json{{"name", name},
                                      {"error", {{"stage", e.stage()}, {"message", e.what()}}}}
                           .dump();
    }
    return out;
}

int run_batch(const std::string& input, const std::string& output, const std::string& format,
              unsigned jobs, bool verify) {
    std::istringstream in(read_file(input));
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    }

    std::vector<BatchLine> results(lines.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < lines.size(); ++i)
            results[i] = process_record(lines[i], format, verify);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < lines.size(); i = next.fetch_add(1))
                results[i] = process_record(lines[i], format, verify);
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::ostringstream body;
    if (format == "csv") body << grsobs::report::csv_header() << "\n";
    std::size_t infinite = 0, none = 0, noncyclic = 0, errors = 0, mismatches = 0;
    for (const auto& r : results) {
        body << r.text << "\n";
        if (r.verdict == "infinite_order") ++infinite;
        if (r.verdict == "no_obstruction") ++none;
        if (r.verdict == "not_applicable_noncyclic") ++noncyclic;
        if (r.error) ++errors;
        if (r.mismatch) ++mismatches;
    }
    if (format == "csv") {
        body << "# records=" << results.size() << " infinite_order=" << infinite
             << " no_obstruction=" << none << " not_applicable_noncyclic=" << noncyclic
             << " errors=" << errors << " mismatches=" << mismatches << "\n";
    } else {
        nlohmann::json summary{{"summary",
                                {{"records", results.size()},
                                 {"infinite_order", infinite},
                                 {"no_obstruction", none},
                                 {"not_applicable_noncyclic", noncyclic},
                                 {"errors", errors},
                                 {"mismatches", mismatches}}}};
        body << summary.dump() << "\n";
    }

    if (output.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw Error("io", "cannot write " + output);
        out << body.str();
    }
    for (const auto& r : results)
        if (r.mismatch)
            std::cerr << "verify mismatch in batch record: see output for details\n";
    return (errors > 0 || mismatches > 0) ? 1 : 0;
}

int run_oracle(const std::string& goeritz_text, long box) {
    grsobs::intlat::IntMatrix m = grsobs::report::parse_matrix_text(goeritz_text);
    if (m.rows() > 6) throw Error("limit", "oracle mode is limited to rank <= 6");
    if (box < 0 || box > 10) throw Error("limit", "oracle box bound is limited to 0..10");
    grsobs::diagram::GoeritzForm form = grsobs::diagram::goeritz_from_matrix(m);
    auto structures = grsobs::dinv::spinc_enumerate(form);
    grsobs::dinv::CosetMaximizer maximizer(form.matrix);
    const grsobs::Rational rank_term(static_cast<long>(form.rank()));

    std::size_t agree = 0;
    for (const auto& s : structures) {
        auto sphere = maximizer.sphere(s.rep.coords);
        auto boxed = maximizer.box(s.rep.coords, box);
        grsobs::Rational d = (sphere.max_square + rank_term) / 4;
        std::string h = "0";
        if (!s.label.empty()) {
            h.clear();
            for (std::size_t k = 0; k < s.label.size(); ++k)
                h += (k ? "," : "") + s.label[k].str();
        }
        std::cout << "class h=" << h
                  << ": sphere=" << grsobs::rational_to_string(sphere.max_square)
                  << " box=" << grsobs::rational_to_string(boxed.max_square)
                  << " d=" << grsobs::rational_to_string(d) << "\n";
        if (sphere.max_square == boxed.max_square) {
            ++agree;
        } else {
            std::cout << "DISAGREEMENT at h=" << h << "\n";
            return 1;
        }
    }
    std::cout << agree << "/" << structures.size() << " classes agree\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Goeritz-matrix concordance-order obstructions from knot diagrams"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "report for a single knot");
    std::string pd_path, goeritz_text;
    bool pretty = false;
    auto* pd_opt = compute->add_option("--pd", pd_path, "file with a PD code");
    auto* gz_opt =
        compute->add_option("--goeritz", goeritz_text, "reduced Goeritz matrix, e.g. [[-3]]");
    compute->add_flag("--pretty", pretty, "human-readable output");
    pd_opt->excludes(gz_opt);

    // batch
    auto* batch = app.add_subcommand("batch", "process a JSON-lines knot file");
    std::string input, output, format = "json";
    unsigned jobs = 1;
    bool verify = false;
    batch->add_option("--input", input, "JSON-lines input file")->required();
    batch->add_option("--output", output, "output file (default: stdout)");
    batch->add_option("--format", format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    batch->add_option("--jobs", jobs, "worker threads");
    batch->add_flag("--verify", verify, "check records against expected values");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "cross-check the lattice maximizer");
    std::string oracle_goeritz;
    long box = 8;
    oracle->add_option("--goeritz", oracle_goeritz, "reduced Goeritz matrix")->required();
    oracle->add_option("--box", box, "exhaustive box bound (<= 10)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) {
            if (pd_path.empty() == goeritz_text.empty())
                throw Error("validate", "compute needs exactly one of --pd or --goeritz");
            return run_compute(pd_path, goeritz_text, pretty);
        }
        if (batch->parsed()) return run_batch(input, output, format, jobs, verify);
        if (oracle->parsed()) return run_oracle(oracle_goeritz, box);
    } catch (const Error& e) {
        std::cerr << e.stage() << " error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
