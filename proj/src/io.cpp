#include "simpson/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "simpson/errors.hpp"

namespace simpson::io {

using nlohmann::json;

namespace {

std::string bits_of(int n, std::uint32_t b) {
    std::string out;
    for (int f = 1; f <= n; ++f) out.push_back(static_cast<char>('0' + ((b >> (n - f)) & 1U)));
    return out;
}

double parse_double(const json& value, const std::string& what) {
    if (value.is_number()) return value.get<double>();
    if (value.is_string()) {
        const auto& s = value.get_ref<const std::string&>();
        double out = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        if (ec == std::errc{} && ptr == s.data() + s.size()) return out;
    }
    throw FormatError(what + " is not a number");
}

int parse_bit(const json& value, const char* what) {
    if (!value.is_number_integer()) throw FormatError(std::string(what) + " must be 0 or 1");
    const int v = value.get<int>();
    if (v != 0 && v != 1) throw FormatError(std::string(what) + " must be 0 or 1");
    return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) fields.push_back(field);
    if (!line.empty() && line.back() == sep) fields.emplace_back();
    return fields;
}

std::uint64_t parse_count(const std::string& s, std::size_t line) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw FormatError("line " + std::to_string(line) + ": '" + s +
                          "' is not a nonnegative integer");
    }
    return out;
}

}  // namespace

std::string format_probability(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", p);
    return buf;
}

std::string to_json(const JointDistribution& joint, const std::optional<Provenance>& provenance) {
    const int n = joint.n();
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["n"] = n;
    doc["p_treated"] = format_probability(joint.p_treated());
    json entries = json::array();
    for (std::size_t i = 0; i < joint.probs().size(); ++i) {
        const Outcome o = outcome_at(n, i);
        entries.push_back({{"x", o.x},
                           {"a", o.a},
                           {"b", bits_of(n, o.b)},
                           {"p", format_probability(joint.probs()[i])}});
    }
    doc["entries"] = std::move(entries);
    if (provenance) {
        const auto& s = provenance->seed;
        doc["provenance"] = {
            {"seed", {format_probability(s.a), format_probability(s.b), format_probability(s.c),
                      format_probability(s.d)}},
            {"construction", provenance->construction}};
    }
    return doc.dump(2) + "\n";
}

DistributionDocument from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    try {
        if (!doc.is_object()) throw FormatError("document is not a JSON object");
        if (!doc.contains("schema_version") || !doc["schema_version"].is_string()) {
            throw FormatError("missing schema_version");
        }
        if (doc["schema_version"].get<std::string>() != kSchemaVersion) {
            throw FormatError("unsupported schema_version " + doc["schema_version"].dump());
        }
        if (!doc.contains("n") || !doc["n"].is_number_integer()) throw FormatError("missing n");
        const int n = doc["n"].get<int>();
        if (n < 0 || n > kMaxFactors) throw FormatError("n out of range");
        if (!doc.contains("entries") || !doc["entries"].is_array()) {
            throw FormatError("missing entries");
        }

        std::vector<double> probs(outcome_count(n), 0.0);
        std::vector<bool> seen(probs.size(), false);
        for (const auto& entry : doc["entries"]) {
            if (!entry.is_object() || !entry.contains("x") || !entry.contains("a") ||
                !entry.contains("b") || !entry.contains("p")) {
                throw FormatError("entry lacks one of x, a, b, p");
            }
            const int x = parse_bit(entry["x"], "x");
            const int a = parse_bit(entry["a"], "a");
            if (!entry["b"].is_string()) throw FormatError("b must be a bit string");
            const auto& bits = entry["b"].get_ref<const std::string&>();
            if (static_cast<int>(bits.size()) != n) {
                throw FormatError("b '" + bits + "' does not have length " + std::to_string(n));
            }
            std::uint32_t b = 0;
            for (char ch : bits) {
                if (ch != '0' && ch != '1') throw FormatError("b '" + bits + "' is not binary");
                b = (b << 1) | static_cast<std::uint32_t>(ch - '0');
            }
            const std::size_t idx = outcome_index(n, {x, a, b});
            if (seen[idx]) throw FormatError("duplicate entry for outcome " + std::to_string(idx));
            seen[idx] = true;
            probs[idx] = parse_double(entry["p"], "p");
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
            throw FormatError("entries do not cover every outcome");
        }

        DistributionDocument out{JointDistribution(n, std::move(probs), kLoadTolerance), {}};
        if (doc.contains("p_treated")) {
            const double stated = parse_double(doc["p_treated"], "p_treated");
            if (std::abs(stated - out.joint.p_treated()) > kLoadTolerance) {
                throw FormatError("p_treated disagrees with the entries");
            }
        }
        if (doc.contains("provenance")) {
            const auto& prov = doc["provenance"];
            if (!prov.contains("seed") || !prov["seed"].is_array() || prov["seed"].size() != 4) {
                throw FormatError("provenance.seed must hold four values");
            }
            Provenance p;
            p.seed = {parse_double(prov["seed"][0], "seed"), parse_double(prov["seed"][1], "seed"),
                      parse_double(prov["seed"][2], "seed"), parse_double(prov["seed"][3], "seed")};
            if (prov.contains("construction") && prov["construction"].is_string()) {
                p.construction = prov["construction"].get<std::string>();
            }
            out.provenance = p;
        }
        return out;
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed document: ") + e.what());
    } catch (const PreconditionError& e) {
        throw FormatError(e.what());
    }
}

std::string to_csv(const Dataset& data) {
    const int n = data.n();
    std::string out = "x,a";
    for (int f = 1; f <= n; ++f) out += ",b" + std::to_string(f);
    out += ",count\n";
    for (std::size_t i = 0; i < data.counts().size(); ++i) {
        const std::uint64_t c = data.counts()[i];
        if (c == 0) continue;
        const Outcome o = outcome_at(n, i);
        out += std::to_string(o.x) + "," + std::to_string(o.a);
        for (int f = 1; f <= n; ++f) out += "," + std::to_string((o.b >> (n - f)) & 1U);
        out += "," + std::to_string(c) + "\n";
    }
    return out;
}

Dataset from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw FormatError("empty dataset file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto header = split(line, ',');
    if (header.size() < 3 || header[0] != "x" || header[1] != "a" || header.back() != "count") {
        throw FormatError("header must read x,a,b1,...,bn,count");
    }
    const int n = static_cast<int>(header.size()) - 3;
    if (n > kMaxFactors) throw FormatError("too many factor columns");
    for (int f = 1; f <= n; ++f) {
        if (header[static_cast<std::size_t>(f + 1)] != "b" + std::to_string(f)) {
            throw FormatError("header column " + std::to_string(f + 2) + " must be b" +
                              std::to_string(f));
        }
    }

    std::vector<std::uint64_t> counts(outcome_count(n), 0);
    std::vector<bool> seen(counts.size(), false);
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != header.size()) {
            throw FormatError("line " + std::to_string(line_no) + ": expected " +
                              std::to_string(header.size()) + " fields");
        }
        int bits[2] = {0, 0};
        std::uint32_t b = 0;
        for (std::size_t col = 0; col + 1 < fields.size(); ++col) {
            const auto& s = fields[col];
            if (s != "0" && s != "1") {
                throw FormatError("line " + std::to_string(line_no) + ": '" + s +
                                  "' is not 0 or 1");
            }
            const int v = s[0] - '0';
            if (col < 2) {
                bits[col] = v;
            } else {
                b = (b << 1) | static_cast<std::uint32_t>(v);
            }
        }
        const std::size_t idx = outcome_index(n, {bits[0], bits[1], b});
        if (seen[idx]) throw FormatError("line " + std::to_string(line_no) + ": duplicate cell");
        seen[idx] = true;
        counts[idx] = parse_count(fields.back(), line_no);
    }
    try {
        return Dataset(n, std::move(counts));
    } catch (const PreconditionError& e) {
        throw FormatError(e.what());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << contents;
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace simpson::io
