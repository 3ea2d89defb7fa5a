#include "trackbench/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>

#include <json.hpp>

#include "trackbench/error.hpp"

namespace fs = std::filesystem;

namespace trackbench {

namespace {

std::string read_file(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open \"" + file.string() + "\" for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

void write_file(const fs::path& file, const std::string& content) {
    std::ofstream out(file, std::ios::binary);
    if (!out) {
        throw Error("cannot open \"" + file.string() + "\" for writing");
    }
    out << content;
    if (!out) {
        throw Error("failed writing \"" + file.string() + "\"");
    }
}

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())) != 0) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())) != 0) {
        text.remove_suffix(1);
    }
    return text;
}

// Splits a annotation line on commas, spaces, or tabs, any run of them.
std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (start < line.size()) {
        while (start < line.size() &&
               (line[start] == ',' || line[start] == ' ' || line[start] == '\t')) {
            ++start;
        }
        std::size_t end = start;
        while (end < line.size() && line[end] != ',' && line[end] != ' ' &&
               line[end] != '\t') {
            ++end;
        }
        if (end > start) {
            fields.push_back(line.substr(start, end - start));
        }
        start = end;
    }
    return fields;
}

double parse_field(std::string_view token, const fs::path& file, std::size_t line_no,
                   std::string_view line) {
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError("\"" + file.string() + "\" line " + std::to_string(line_no) +
                         ": cannot parse \"" + std::string(token) + "\" in \"" +
                         std::string(line) + "\"");
    }
    return value;
}

FrameBox parse_frame_line(std::string_view raw, const fs::path& file, std::size_t line_no) {
    const std::string_view line = trim(raw);
    if (line.empty()) {
        return std::nullopt;
    }
    const auto fields = split_fields(line);
    if (fields.size() != 4) {
        throw ParseError("\"" + file.string() + "\" line " + std::to_string(line_no) +
                         ": expected 4 fields, got " + std::to_string(fields.size()) +
                         " in \"" + std::string(line) + "\"");
    }
    double values[4];
    for (std::size_t i = 0; i < 4; ++i) {
        values[i] = parse_field(fields[i], file, line_no, line);
    }
    const int nans = static_cast<int>(std::isnan(values[0])) + std::isnan(values[1]) +
                     std::isnan(values[2]) + std::isnan(values[3]);
    if (nans == 4) {
        return std::nullopt;
    }
    if (nans != 0) {
        throw ParseError("\"" + file.string() + "\" line " + std::to_string(line_no) +
                         ": mixed NaN and numeric fields in \"" + std::string(line) + "\"");
    }
    const BoundingBox box{values[0], values[1], values[2], values[3]};
    if (!box.valid()) {
        throw ParseError("\"" + file.string() + "\" line " + std::to_string(line_no) +
                         ": non-finite or negative-extent box in \"" + std::string(line) +
                         "\"");
    }
    return box;
}

nlohmann::json parse_json(const fs::path& file) {
    try {
        return nlohmann::json::parse(read_file(file));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("\"" + file.string() + "\": " + e.what());
    }
}

const nlohmann::json& require_key(const nlohmann::json& node, const char* key,
                                  const fs::path& file) {
    const auto it = node.find(key);
    if (it == node.end()) {
        throw ParseError("\"" + file.string() + "\": missing key \"" + key + "\"");
    }
    return *it;
}

std::string require_string(const nlohmann::json& node, const char* key, const fs::path& file) {
    const auto& value = require_key(node, key, file);
    if (!value.is_string()) {
        throw ParseError("\"" + file.string() + "\": key \"" + key + "\" must be a string");
    }
    return value.get<std::string>();
}

double require_number(const nlohmann::json& node, const char* key, const fs::path& file) {
    const auto& value = require_key(node, key, file);
    if (!value.is_number()) {
        throw ParseError("\"" + file.string() + "\": key \"" + key + "\" must be a number");
    }
    return value.get<double>();
}

}  // namespace

std::string format_double(double value) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

Trajectory load_trajectory(const fs::path& file) {
    const std::string content = read_file(file);
    std::vector<FrameBox> frames;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < content.size()) {
        std::size_t end = content.find('\n', start);
        if (end == std::string::npos) {
            end = content.size();
        }
        std::string_view line(content.data() + start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        ++line_no;
        frames.push_back(parse_frame_line(line, file, line_no));
        start = end + 1;
    }
    if (frames.empty()) {
        throw ParseError("\"" + file.string() + "\": no frames");
    }
    try {
        return Trajectory(std::move(frames));
    } catch (const ValidationError& e) {
        throw ParseError("\"" + file.string() + "\": " + e.what());
    }
}

void save_trajectory(const Trajectory& trajectory, const fs::path& file) {
    std::string out;
    for (const auto& frame : trajectory.frames()) {
        if (frame.has_value()) {
            out += format_double(frame->x);
            out += ',';
            out += format_double(frame->y);
            out += ',';
            out += format_double(frame->w);
            out += ',';
            out += format_double(frame->h);
        } else {
            out += "NaN,NaN,NaN,NaN";
        }
        out += '\n';
    }
    write_file(file, out);
}

Corpus load_manifest(const fs::path& manifest) {
    const nlohmann::json doc = parse_json(manifest);
    const auto& entries = require_key(doc, "sequences", manifest);
    if (!entries.is_array()) {
        throw ParseError("\"" + manifest.string() + "\": key \"sequences\" must be an array");
    }
    const fs::path base = manifest.has_parent_path() ? manifest.parent_path() : fs::path(".");
    std::vector<SequenceRecord> sequences;
    sequences.reserve(entries.size());
    for (const auto& entry : entries) {
        if (!entry.is_object()) {
            throw ParseError("\"" + manifest.string() + "\": sequence entries must be objects");
        }
        const std::string id = require_string(entry, "id", manifest);
        const std::string scenario_name = require_string(entry, "scenario", manifest);
        const auto scenario = parse_scenario(scenario_name);
        if (!scenario.has_value()) {
            throw ParseError("\"" + manifest.string() + "\": sequence \"" + id +
                             "\" has unknown scenario \"" + scenario_name +
                             "\"; valid scenarios: " + scenario_names());
        }
        const std::string sub_scenario = require_string(entry, "sub_scenario", manifest);
        const std::string source_dataset = require_string(entry, "source_dataset", manifest);
        const std::string gt_path = require_string(entry, "gt_path", manifest);
        const double declared = require_number(entry, "frame_count", manifest);
        fs::path resolved(gt_path);
        if (resolved.is_relative()) {
            resolved = base / resolved;
        }
        Trajectory gt = load_trajectory(resolved);
        if (declared != static_cast<double>(gt.length())) {
            throw ParseError("\"" + manifest.string() + "\": sequence \"" + id +
                             "\" declares " + format_double(declared) + " frames but \"" +
                             resolved.string() + "\" has " + std::to_string(gt.length()));
        }
        sequences.push_back({id, *scenario, sub_scenario, source_dataset, std::move(gt)});
    }
    return Corpus(std::move(sequences));
}

std::vector<ResultSet> load_results(const fs::path& root, const Corpus& corpus) {
    if (!fs::is_directory(root)) {
        throw ParseError("results root \"" + root.string() + "\" is not a directory");
    }
    std::vector<std::string> trackers;
    for (const auto& entry : fs::directory_iterator(root)) {
        if (entry.is_directory()) {
            trackers.push_back(entry.path().filename().string());
        }
    }
    std::sort(trackers.begin(), trackers.end());
    if (trackers.empty()) {
        throw ParseError("no tracker directories under \"" + root.string() + "\"");
    }
    std::vector<ResultSet> results;
    for (const auto& tracker : trackers) {
        const fs::path tracker_dir = root / tracker;
        std::vector<int> passes;
        for (const auto& entry : fs::directory_iterator(tracker_dir)) {
            if (!entry.is_directory()) {
                continue;
            }
            const std::string name = entry.path().filename().string();
            if (name.rfind("pass", 0) != 0 || name.size() == 4) {
                continue;
            }
            int pass = 0;
            const auto [ptr, ec] =
                std::from_chars(name.data() + 4, name.data() + name.size(), pass);
            if (ec != std::errc{} || ptr != name.data() + name.size() || pass < 1) {
                continue;
            }
            passes.push_back(pass);
        }
        std::sort(passes.begin(), passes.end());
        if (passes.empty()) {
            throw ParseError("tracker directory \"" + tracker_dir.string() +
                             "\" has no pass directories");
        }
        for (const int pass : passes) {
            ResultSet run{tracker, pass, {}};
            const fs::path pass_dir = tracker_dir / ("pass" + std::to_string(pass));
            for (const auto& seq : corpus.sequences()) {
                const fs::path file = pass_dir / (seq.id + ".txt");
                if (!fs::is_regular_file(file)) {
                    throw ParseError("tracker \"" + tracker + "\" pass " +
                                     std::to_string(pass) + " is missing sequence \"" +
                                     seq.id + "\" (expected \"" + file.string() + "\")");
                }
                Trajectory trajectory = load_trajectory(file);
                if (trajectory.length() != seq.frame_count()) {
                    throw ParseError("\"" + file.string() + "\" has " +
                                     std::to_string(trajectory.length()) +
                                     " frames, expected " +
                                     std::to_string(seq.frame_count()));
                }
                run.trajectories.emplace(seq.id, std::move(trajectory));
            }
            results.push_back(std::move(run));
        }
    }
    return results;
}

void save_corpus(const Corpus& corpus, const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir / "gt", ec);
    if (ec) {
        throw Error("cannot create directory \"" + (dir / "gt").string() + "\": " +
                    ec.message());
    }
    nlohmann::json manifest;
    manifest["sequences"] = nlohmann::json::array();
    for (const auto& seq : corpus.sequences()) {
        const std::string gt_rel = "gt/" + seq.id + ".txt";
        save_trajectory(seq.gt, dir / "gt" / (seq.id + ".txt"));
        nlohmann::json entry;
        entry["id"] = seq.id;
        entry["scenario"] = std::string(to_string(seq.scenario));
        entry["sub_scenario"] = seq.sub_scenario;
        entry["source_dataset"] = seq.source_dataset;
        entry["gt_path"] = gt_rel;
        entry["frame_count"] = seq.frame_count();
        manifest["sequences"].push_back(std::move(entry));
    }
    write_file(dir / "manifest.json", manifest.dump(2) + "\n");
    for (const auto& run : corpus.results()) {
        const fs::path pass_dir =
            dir / "results" / run.tracker / ("pass" + std::to_string(run.pass_index));
        fs::create_directories(pass_dir, ec);
        if (ec) {
            throw Error("cannot create directory \"" + pass_dir.string() + "\": " +
                        ec.message());
        }
        for (const auto& [id, trajectory] : run.trajectories) {
            save_trajectory(trajectory, pass_dir / (id + ".txt"));
        }
    }
}

void save_quality(const QualityFile& file, const fs::path& path) {
    file.params.validate();
    nlohmann::json doc;
    doc["format_version"] = kQualityFormatVersion;
    doc["eta"] = file.params.eta;
    doc["norm_min"] = file.params.norm_min;
    doc["norm_max"] = file.params.norm_max;
    doc["epsilon"] = file.params.epsilon;
    doc["sequences"] = nlohmann::json::array();
    for (const auto& report : file.reports) {
        nlohmann::json entry;
        entry["id"] = report.sequence_id;
        entry["C"] = report.challenge;
        entry["D"] = report.discrimination;
        entry["V_raw"] = report.variation_raw;
        entry["V"] = report.variation;
        entry["Q"] = report.quality;
        doc["sequences"].push_back(std::move(entry));
    }
    write_file(path, doc.dump(2) + "\n");
}

QualityFile load_quality(const fs::path& path) {
    const nlohmann::json doc = parse_json(path);
    const double version = require_number(doc, "format_version", path);
    if (version != static_cast<double>(kQualityFormatVersion)) {
        throw ParseError("\"" + path.string() + "\": unsupported format version " +
                         format_double(version) + ", expected " +
                         std::to_string(kQualityFormatVersion));
    }
    QualityFile file;
    file.params.eta = require_number(doc, "eta", path);
    file.params.norm_min = require_number(doc, "norm_min", path);
    file.params.norm_max = require_number(doc, "norm_max", path);
    file.params.epsilon = require_number(doc, "epsilon", path);
    file.params.validate();
    const auto& entries = require_key(doc, "sequences", path);
    if (!entries.is_array()) {
        throw ParseError("\"" + path.string() + "\": key \"sequences\" must be an array");
    }
    for (const auto& entry : entries) {
        QualityReport report;
        report.sequence_id = require_string(entry, "id", path);
        report.challenge = require_number(entry, "C", path);
        report.discrimination = require_number(entry, "D", path);
        report.variation_raw = require_number(entry, "V_raw", path);
        report.variation = require_number(entry, "V", path);
        report.quality = require_number(entry, "Q", path);
        file.reports.push_back(std::move(report));
    }
    return file;
}

}  // namespace trackbench
