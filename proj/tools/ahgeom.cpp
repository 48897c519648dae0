// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

// Command line front end: analyze, audit, catalog, batch.
//
// Exit status: 0 success, 1 some audit check failed, 2 input or analysis error.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "ahg/analysis.hpp"
#include "ahg/audit.hpp"
#include "ahg/catalog.hpp"
#include "ahg/io.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kAuditFailed = 1;
constexpr int kInputError = 2;

struct Job {
    std::string label;
    std::optional<fs::path> file;
    std::optional<ahg::StructureInput> input;
};

struct Outcome {
    std::string label;
    std::optional<ahg::Report> report;
    std::string error;
    double seconds = 0;
};

ahg::StructureInput load(const Job& job) {
    if (job.input) return *job.input;
    return ahg::load_structure(*job.file);
}

Outcome run_job(const Job& job) {
    Outcome out;
    out.label = job.label;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const auto s = ahg::build_structure(load(job));
        const auto a = ahg::analyze(s);
        out.report = ahg::make_report(a, ahg::run_suite(a));
    } catch (const ahg::ParseError& e) {
        out.error = e.what();
    } catch (const std::exception& e) {
        out.error = job.label + ": " + e.what();
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

/// Results are stored by job index, so output does not depend on scheduling.
std::vector<Outcome> run_all(const std::vector<Job>& jobs, int threads) {
    std::vector<Outcome> out(jobs.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t k = next++; k < jobs.size(); k = next++) out[k] = run_job(jobs[k]);
    };
    const int n = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

std::vector<Job> catalog_jobs(const std::string& selector) {
    std::vector<Job> jobs;
    for (const auto& e : ahg::catalog_entries()) {
        if (selector == "all" || selector == e.name) jobs.push_back({e.name, std::nullopt, ahg::catalog_input(e.name)});
    }
    if (jobs.empty()) throw std::out_of_range("unknown catalog entry: " + selector);
    return jobs;
}

/// K randomized compatible Kaehler forms, cycling over the base structures.
std::vector<Job> sample_jobs(const std::vector<Job>& base, int samples, std::uint32_t seed) {
    std::vector<ahg::StructureInput> ortho;
    for (const auto& job : base) ortho.push_back(ahg::orthonormal_input(ahg::build_structure(load(job))));
    std::vector<Job> jobs;
    for (int k = 0; k < samples; ++k) {
        const auto& in = ortho[static_cast<std::size_t>(k) % ortho.size()];
        auto r = ahg::randomize_kaehler_form(in, seed + static_cast<std::uint32_t>(k));
        jobs.push_back({r.name, std::nullopt, std::move(r)});
    }
    return jobs;
}

void print_summary(const Outcome& o, bool verbose) {
    if (!o.report) {
        std::cout << o.label << ": ERROR\n  " << o.error << "\n";
        return;
    }
    const auto& a = o.report->audit;
    std::cout << o.label << ": " << a.passed << " passed, " << a.failed << " failed, " << a.skipped << " skipped";
    if (verbose) std::cout << " (" << o.report->modules << ")";
    std::cout << "\n";
    for (const auto& f : a.failures) std::cout << "  FAIL " << f << "\n";
}

int status_of(const std::vector<Outcome>& outs) {
    int status = kOk;
    for (const auto& o : outs) {
        if (!o.report) return kInputError;
        if (o.report->audit.failed > 0) status = kAuditFailed;
    }
    return status;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

std::string render(const ahg::Report& r, const std::string& format) {
    if (format == "text") return ahg::report_text(r);
    return ahg::report_to_json(r).dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of left-invariant almost Hermitian structures"};
    app.require_subcommand(1);

    std::string file;
    std::string catalog;
    std::string format = "json";
    std::string out_path;
    int samples = 0;
    std::uint32_t seed = 1;
    int jobs = 1;
    std::string dir;
    std::string out_dir;

    auto* analyze = app.add_subcommand("analyze", "Analyze one structure and print its report");
    analyze->add_option("file", file, "Structure file (JSON)");
    analyze->add_option("--catalog", catalog, "Built-in structure name");
    analyze->add_option("--report", format, "Report format")->check(CLI::IsMember({"json", "text"}));
    analyze->add_option("--out", out_path, "Write the report here instead of stdout");

    auto* audit = app.add_subcommand("audit", "Run the identity audit");
    audit->add_option("file", file, "Structure file (JSON)");
    audit->add_option("--catalog", catalog, "Built-in structure name, or 'all'");
    audit->add_option("--samples", samples, "Randomized Kaehler forms to add")->check(CLI::NonNegativeNumber);
    audit->add_option("--seed", seed, "Seed of the first randomized sample");
    audit->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* cat = app.add_subcommand("catalog", "Built-in structures");
    auto* cat_list = cat->add_subcommand("list", "List catalog entries");
    cat->require_subcommand(1);

    auto* batch = app.add_subcommand("batch", "Analyze every *.json file in a directory");
    batch->add_option("dir", dir, "Directory of structure files");
    batch->add_option("--catalog", catalog, "Built-in structure name, or 'all', instead of a directory");
    batch->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    batch->add_option("--out", out_dir, "Directory for one JSON report per structure");

    CLI11_PARSE(app, argc, argv);

    try {
        const auto inputs = [&]() -> std::vector<Job> {
            if (file.empty() == catalog.empty()) throw CLI::ValidationError("give exactly one of <file> and --catalog");
            if (!catalog.empty()) return catalog_jobs(catalog);
            return {{file, fs::path(file), std::nullopt}};
        };

        if (*cat_list) {
            for (const auto& e : ahg::catalog_entries()) std::cout << e.name << "  " << e.description << "\n";
            return kOk;
        }

        if (*analyze) {
            const auto js = inputs();
            if (js.size() != 1) throw CLI::ValidationError("analyze takes a single structure");
            const auto o = run_job(js.front());
            if (!o.report) {
                std::cerr << "error: " << o.error << "\n";
                return kInputError;
            }
            write_text(out_path, render(*o.report, format));
            return kOk;
        }

        if (*audit) {
            auto js = inputs();
            auto extra = sample_jobs(js, samples, seed);
            js.insert(js.end(), extra.begin(), extra.end());
            const auto outs = run_all(js, jobs);
            int failed = 0;
            for (const auto& o : outs) {
                print_summary(o, false);
                if (!o.report || o.report->audit.failed > 0) ++failed;
            }
            std::cout << outs.size() << " structures, " << failed << " with failures or errors\n";
            return status_of(outs);
        }

        if (*batch) {
            std::vector<Job> js;
            if (!catalog.empty()) {
                js = catalog_jobs(catalog);
            } else {
                if (dir.empty()) throw CLI::ValidationError("batch needs a directory or --catalog");
                std::vector<fs::path> files;
                for (const auto& entry : fs::directory_iterator(dir)) {
                    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
                }
                std::sort(files.begin(), files.end());
                for (const auto& p : files) js.push_back({p.filename().string(), p, std::nullopt});
            }
            const auto outs = run_all(js, jobs);
            if (!out_dir.empty()) fs::create_directories(out_dir);
            for (std::size_t k = 0; k < outs.size(); ++k) {
                print_summary(outs[k], true);
                if (!out_dir.empty() && outs[k].report) {
                    const std::string stem = js[k].file ? js[k].file->stem().string() : js[k].label;
                    write_text((fs::path(out_dir) / (stem + ".report.json")).string(), render(*outs[k].report, "json"));
                }
            }
            int failed = 0;
            for (const auto& o : outs)
                if (!o.report || o.report->audit.failed > 0) ++failed;
            std::cout << outs.size() << " structures, " << failed << " with failures or errors\n";
            return status_of(outs);
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kOk;
}
