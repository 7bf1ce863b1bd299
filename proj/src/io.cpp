#include "qslice/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qslice/errors.hpp"

namespace qslice::io {

using nlohmann::json;

namespace {

json series_json(const SliceLaurentSeries& f) {
    json records = json::array();
    int n = f.n_min();
    for (const auto& c : f.dense()) {
        if (!(c == Quaternion{}))
            records.push_back({{"n", n}, {"w", c.w}, {"x", c.x}, {"y", c.y}, {"z", c.z}});
        ++n;
    }
    return json{{"coefficients", std::move(records)}};
}

double finite_number(const json& record, const char* key, long index) {
    const auto it = record.find(key);
    if (it == record.end() || !it->is_number())
        throw ParseError("record " + std::to_string(index) + ": missing numeric field '" + key + "'",
                         index);
    const double v = it->get<double>();
    if (!std::isfinite(v))
        throw ParseError("record " + std::to_string(index) + ": non-finite field '" + key + "'", index);
    return v;
}

SliceLaurentSeries series_from_json(const json& doc) {
    const json* records = &doc;
    if (doc.is_object()) {
        const auto it = doc.find("coefficients");
        if (it == doc.end()) throw ParseError("series: missing 'coefficients'");
        records = &*it;
    }
    if (!records->is_array()) throw ParseError("series: coefficients must be an array");

    SliceLaurentSeries f;
    std::set<long long> seen;
    long index = 0;
    for (const auto& r : *records) {
        if (!r.is_object())
            throw ParseError("record " + std::to_string(index) + ": not an object", index);
        const auto nit = r.find("n");
        if (nit == r.end() || !nit->is_number_integer())
            throw ParseError("record " + std::to_string(index) + ": missing integer field 'n'", index);
        const long long n = nit->get<long long>();
        if (n < -(1LL << 24) || n > (1LL << 24))
            throw ParseError("record " + std::to_string(index) + ": index out of range", index);
        if (!seen.insert(n).second)
            throw ParseError("record " + std::to_string(index) + ": duplicate index " + std::to_string(n),
                             index);
        f.set(static_cast<int>(n), {finite_number(r, "w", index), finite_number(r, "x", index),
                                    finite_number(r, "y", index), finite_number(r, "z", index)});
        ++index;
    }
    return f;
}

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
}

}  // namespace

std::string series_to_text(const SliceLaurentSeries& f) { return series_json(f).dump(2) + "\n"; }

SliceLaurentSeries series_from_text(std::string_view text) { return series_from_json(parse(text)); }

SliceLaurentSeries read_series(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return series_from_text(buf.str());
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string matrix_to_text(const QuaternionMatrix& m) {
    json entries = json::array();
    for (const auto& q : m.entries()) entries.push_back({q.w, q.x, q.y, q.z});
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}}.dump() + "\n";
}

QuaternionMatrix matrix_from_text(std::string_view text) {
    const auto doc = parse(text);
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") || !doc.contains("entries"))
        throw ParseError("matrix: expected rows, cols and entries");
    const auto rows = doc["rows"].get<std::size_t>();
    const auto cols = doc["cols"].get<std::size_t>();
    const auto& entries = doc["entries"];
    if (!entries.is_array() || entries.size() != rows * cols)
        throw ParseError("matrix: entry count does not match dimensions");
    QuaternionMatrix m(rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        if (!e.is_array() || e.size() != 4)
            throw ParseError("entry " + std::to_string(i) + ": expected 4 components", static_cast<long>(i));
        m(i / cols, i % cols) = {e[0].get<double>(), e[1].get<double>(), e[2].get<double>(), e[3].get<double>()};
    }
    return m;
}

std::string report_to_text(const ApproximationReport& r) {
    json doc;
    doc["hankel_norm"] = r.hankel_norm;
    doc["constructive_distance"] = r.constructive_distance;
    doc["optimized_distance"] = r.optimized_distance;
    doc["best_approx"] = series_json(r.best_approx)["coefficients"];
    doc["residual_negative_mass"] = r.residual_negative_mass;
    doc["truncation_N"] = r.truncation_N;
    doc["grid"] = r.grid;
    return doc.dump(2) + "\n";
}

ApproximationReport report_from_text(std::string_view text) {
    const auto doc = parse(text);
    try {
        ApproximationReport r;
        r.hankel_norm = doc.at("hankel_norm").get<double>();
        r.constructive_distance = doc.at("constructive_distance").get<double>();
        r.optimized_distance = doc.at("optimized_distance").get<double>();
        r.best_approx = series_from_json(doc.at("best_approx"));
        r.residual_negative_mass = doc.at("residual_negative_mass").get<double>();
        r.truncation_N = doc.at("truncation_N").get<int>();
        r.grid = doc.at("grid").get<int>();
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
}

}  // namespace qslice::io
