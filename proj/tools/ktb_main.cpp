// Command-line front end. Talks to the library only through the C interface.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ktb/ktb.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CliFailure {
    int code;
    std::string message;
};

struct Owned {
    char* s = nullptr;
    ~Owned() { ktb_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

using FramePtr = std::unique_ptr<ktb_frame, decltype(&ktb_frame_free)>;

void check(ktb_status st)
{
    if (st != KTB_OK)
        throw CliFailure{kExitUsage, std::string(ktb_status_name(st)) + ": " + ktb_last_error()};
}

int verdict_exit(ktb_verdict v)
{
    switch (v) {
    case KTB_PASS: return kExitPass;
    case KTB_FAIL: return kExitFail;
    default: return kExitUsage;
    }
}

class Output {
public:
    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw CliFailure{kExitUsage, "cannot open output file '" + path + "'"};
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
    void line(const std::string& s)
    {
        stream() << s;
        if (s.empty() || s.back() != '\n')
            stream() << '\n';
    }

private:
    std::ofstream file_;
};

struct Source {
    std::string graph6, file, preset, family;

    void add_to(CLI::App* cmd)
    {
        cmd->add_option("--graph6", graph6, "frame as a graph6 string");
        cmd->add_option("--file", file, "file whose first non-blank line is a graph6 string");
        cmd->add_option("--preset", preset, "named truncation: g1 or g2");
        cmd->add_option("--family", family, "truncation parameters, e.g. \"N=2,4;p=6\"");
    }

    FramePtr load() const
    {
        const int given = !graph6.empty() + !file.empty() + !preset.empty() + !family.empty();
        if (given != 1)
            throw CliFailure{kExitUsage, "give exactly one of --graph6, --file, --preset, --family"};
        ktb_frame* f = nullptr;
        if (!graph6.empty())
            check(ktb_frame_from_graph6(graph6.c_str(), &f));
        else if (!preset.empty())
            check(ktb_frame_preset(preset.c_str(), &f));
        else if (!family.empty())
            check(ktb_frame_family(family.c_str(), &f));
        else
            check(ktb_frame_from_graph6(first_line(file).c_str(), &f));
        return FramePtr(f, ktb_frame_free);
    }

    static std::string first_line(const std::string& path)
    {
        std::ifstream in(path);
        if (!in)
            throw CliFailure{kExitUsage, "cannot read '" + path + "'"};
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.pop_back();
            if (!line.empty())
                return line;
        }
        throw CliFailure{kExitUsage, "'" + path + "' holds no graph6 line"};
    }
};

ktb_format parse_format(const std::string& f)
{
    if (f == "json") return KTB_FORMAT_JSON;
    if (f == "graph6") return KTB_FORMAT_GRAPH6;
    if (f == "dot") return KTB_FORMAT_DOT;
    if (f == "text") return KTB_FORMAT_TEXT;
    throw CliFailure{kExitUsage, "unknown format '" + f + "'"};
}

std::vector<std::string> frame_warnings(const ktb_frame* f)
{
    Owned info;
    check(ktb_frame_export(f, KTB_FORMAT_JSON, &info.s));
    return nlohmann::json::parse(info.str()).value("warnings", std::vector<std::string>{});
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite KTB modal-algebra workbench"};
    app.set_config("--config", "", "flat key = value file; flags override it");
    app.require_subcommand(1);

    std::string out_path;
    std::string format = "json";
    app.add_option("--out", out_path, "write output to this file instead of stdout");

    Source src;

    auto* frame_cmd = app.add_subcommand("frame", "frame information and conversion");
    src.add_to(frame_cmd);
    frame_cmd->add_option("--format", format, "json, graph6, dot or text")->capture_default_str();
    frame_cmd->add_option("--out", out_path);

    auto* family_cmd = app.add_subcommand("family", "build a truncation of the graph family");
    family_cmd->add_option("--family", src.family, "\"N=2,4;p=6\"")->required();
    family_cmd->add_option("--format", format, "json, graph6, dot or text")->capture_default_str();
    family_cmd->add_option("--out", out_path);

    std::size_t min_blocks = 0, max_blocks = 0;
    auto* quot_cmd = app.add_subcommand("quotients", "list stable partitions and quotient classes");
    src.add_to(quot_cmd);
    quot_cmd->add_option("--min-blocks", min_blocks, "smallest block count (default 1)");
    quot_cmd->add_option("--max-blocks", max_blocks, "largest block count (default n)");
    quot_cmd->add_option("--out", out_path);

    auto* cover_cmd = app.add_subcommand("check-cover", "cover test: only trivial and two-block quotients");
    src.add_to(cover_cmd);
    cover_cmd->add_option("--out", out_path);

    std::string expr;
    std::vector<std::string> binds;
    auto* term_cmd = app.add_subcommand("term", "evaluate a term in the complex algebra");
    src.add_to(term_cmd);
    term_cmd->add_option("--expr", expr, "term, e.g. \"And(Dia(Var x))(Not(Var x))\" or JSON")->required();
    term_cmd->add_option("--bind", binds, "name=set, e.g. x=D or \"x={d, c1}\"");
    term_cmd->add_option("--format", format, "json or text")->capture_default_str();
    term_cmd->add_option("--out", out_path);

    std::string lemma = "all", mode = "auto", against;
    std::uint64_t seed = 20190611, samples = 100000;
    unsigned jobs = 1;
    bool timing = false, list = false;
    auto* verify_cmd = app.add_subcommand("verify", "run lemma checks");
    src.add_to(verify_cmd);
    verify_cmd->add_option("--lemma", lemma, "lemma id or all")->capture_default_str();
    verify_cmd->add_option("--mode", mode, "auto, exhaustive or sampled")->capture_default_str();
    verify_cmd->add_option("--seed", seed, "seed for sampled checks")->capture_default_str();
    verify_cmd->add_option("--samples", samples, "sample count for sampled checks")->capture_default_str();
    verify_cmd->add_option("--jobs", jobs, "worker threads for the whole suite")->capture_default_str();
    verify_cmd->add_option("--against", against, "second family for diff, e.g. \"N=2,4\"");
    verify_cmd->add_flag("--timing", timing, "include wall time (output stops being reproducible)");
    verify_cmd->add_flag("--list", list, "list lemma ids and exit");
    verify_cmd->add_option("--out", out_path);

    std::size_t max_n = 0, min_n = 0;
    std::string input;
    auto* search_cmd = app.add_subcommand("search", "cover test over enumerated graphs or a graph6 stream");
    search_cmd->add_option("--max-n", max_n, "enumerate connected graphs with up to max-n vertices (<= 10)");
    search_cmd->add_option("--min-n", min_n, "smallest vertex count to enumerate (default max-n)");
    search_cmd->add_option("--file", input, "graph6 lines to test; - reads stdin");
    search_cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    search_cmd->add_flag("--timing", timing, "include per-graph wall time");
    search_cmd->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        Output out(out_path);

        if (*frame_cmd || *family_cmd) {
            FramePtr f = src.load();
            if (*family_cmd) {
                for (const auto& w : frame_warnings(f.get()))
                    std::cerr << "warning: " << w << '\n';
            }
            Owned s;
            check(ktb_frame_export(f.get(), parse_format(format), &s.s));
            out.line(s.str());
            return kExitPass;
        }
        if (*quot_cmd) {
            FramePtr f = src.load();
            Owned s;
            check(ktb_quotients(f.get(), min_blocks, max_blocks, &s.s));
            out.line(s.str());
            return kExitPass;
        }
        if (*cover_cmd) {
            FramePtr f = src.load();
            ktb_verdict v = KTB_NOT_APPLICABLE;
            Owned s;
            check(ktb_check_cover(f.get(), &v, &s.s));
            out.line(s.str());
            return verdict_exit(v);
        }
        if (*term_cmd) {
            FramePtr f = src.load();
            std::string joined;
            for (const auto& b : binds)
                joined += (joined.empty() ? "" : ";") + b;
            Owned s;
            check(ktb_term_eval(f.get(), expr.c_str(), joined.c_str(), parse_format(format), &s.s));
            out.line(s.str());
            return kExitPass;
        }
        if (*verify_cmd) {
            if (list) {
                Owned s;
                check(ktb_list_lemmas(&s.s));
                out.line(s.str());
                return kExitPass;
            }
            ktb_verify_options o;
            ktb_verify_options_init(&o);
            if (mode == "exhaustive")
                o.mode = KTB_MODE_EXHAUSTIVE;
            else if (mode == "sampled")
                o.mode = KTB_MODE_SAMPLED;
            else if (mode != "auto")
                throw CliFailure{kExitUsage, "unknown mode '" + mode + "'"};
            o.seed = seed;
            o.samples = samples;
            o.jobs = jobs;
            o.include_timing = timing;
            o.against = against.empty() ? nullptr : against.c_str();
            FramePtr f = src.load();
            ktb_verdict v = KTB_FAIL;
            Owned s;
            check(ktb_verify_frame(f.get(), lemma.c_str(), &o, &v, &s.s));
            out.line(s.str());
            return verdict_exit(v);
        }
        if (*search_cmd) {
            if ((max_n == 0) == input.empty())
                throw CliFailure{kExitUsage, "give exactly one of --max-n, --file"};
            ktb_search_options so{jobs, timing};
            ktb_line_callback emit = [](const char* line, void* user) {
                static_cast<Output*>(user)->line(line);
            };
            ktb_search_summary summary{};
            if (max_n != 0) {
                check(ktb_search(min_n == 0 ? max_n : min_n, max_n, &so, emit, &out, &summary));
            } else {
                std::ifstream file;
                if (input != "-") {
                    file.open(input);
                    if (!file)
                        throw CliFailure{kExitUsage, "cannot read '" + input + "'"};
                }
                std::istream& in = input == "-" ? std::cin : file;
                ktb_pipeline* raw = nullptr;
                check(ktb_pipeline_new(&so, emit, &out, &raw));
                std::unique_ptr<ktb_pipeline, decltype(&ktb_pipeline_free)> pipe(raw, ktb_pipeline_free);
                std::string line;
                while (std::getline(in, line)) {
                    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                        line.pop_back();
                    if (!line.empty())
                        check(ktb_pipeline_push(pipe.get(), line.c_str()));
                }
                check(ktb_pipeline_finish(pipe.get(), &summary));
            }
            Owned s;
            check(ktb_summary_json(&summary, &s.s));
            out.line(s.str());
            return kExitPass;
        }
    } catch (const CliFailure& e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    }
    return kExitUsage;
}
