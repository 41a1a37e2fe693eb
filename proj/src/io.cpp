#include "cubefun/io.hpp"

#include <cmath>
#include <fstream>

#include "cubefun/errors.hpp"

namespace cubefun {

using nlohmann::json;

namespace {

int read_n(const json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        throw SchemaError("field \"n\": integer required");
    }
    const int n = j["n"].get<int>();
    if (n < 1 || n > kMaxVariables) throw SchemaError("field \"n\": 1 <= n <= 24 required");
    return n;
}

std::uint32_t parse_mask(const std::string& bits, int n) {
    if (bits.size() != static_cast<std::size_t>(n)) {
        throw SchemaError("fourier mask \"" + bits + "\": expected " + std::to_string(n) +
                          " binary digits");
    }
    std::uint32_t mask = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw SchemaError("fourier mask \"" + bits + "\": binary only");
        mask = (mask << 1) | (c == '1' ? 1u : 0u);
    }
    return mask;
}

std::string format_mask(std::uint32_t mask, int n) {
    std::string bits(n, '0');
    for (int k = 0; k < n; ++k) {
        if (mask >> k & 1) bits[n - 1 - k] = '1';
    }
    return bits;
}

}  // namespace

CubeFunction function_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("function document: object required");
    const int n = read_n(j);
    if (j.contains("convention") && j["convention"] != "bit0_plus_one") {
        throw SchemaError("field \"convention\": only \"bit0_plus_one\" is supported");
    }
    const std::string format = j.value("format", std::string("truth_table"));
    if (!j.contains("values") || !j["values"].is_array()) {
        throw SchemaError("field \"values\": array required");
    }
    const json& values = j["values"];

    if (format == "truth_table") {
        std::vector<double> table;
        table.reserve(values.size());
        for (const auto& v : values) {
            if (!v.is_number()) throw SchemaError("field \"values\": numbers required");
            table.push_back(v.get<double>());
        }
        try {
            return from_truth_table(n, std::move(table));
        } catch (const Error& e) {
            throw SchemaError(std::string("field \"values\": ") + e.what());
        }
    }
    if (format == "fourier") {
        FourierExpansion e;
        e.n = n;
        e.coeffs.assign(std::size_t{1} << n, 0.0);
        for (const auto& pair : values) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
                !pair[1].is_number()) {
                throw SchemaError("fourier values: [\"mask\", coefficient] pairs required");
            }
            e.coeffs[parse_mask(pair[0].get<std::string>(), n)] += pair[1].get<double>();
        }
        return synthesize(e);
    }
    throw SchemaError("field \"format\": \"truth_table\" or \"fourier\" required");
}

json function_to_json(const CubeFunction& f, bool fourier_format) {
    json j;
    j["n"] = f.n;
    j["convention"] = "bit0_plus_one";
    if (fourier_format) {
        j["format"] = "fourier";
        json values = json::array();
        const FourierExpansion& e = f.fourier();
        for (std::size_t mask = 0; mask < e.coeffs.size(); ++mask) {
            if (std::abs(e.coeffs[mask]) > 1e-13) {
                values.push_back(
                    json::array({format_mask(static_cast<std::uint32_t>(mask), f.n),
                                 e.coeffs[mask]}));
            }
        }
        j["values"] = std::move(values);
    } else {
        j["format"] = "truth_table";
        j["values"] = f.values;
    }
    return j;
}

LevelProfile profile_from_json(const json& j) {
    if (!j.is_object() || !j.contains("levels") || !j["levels"].is_array()) {
        throw SchemaError("profile document: {\"n\", \"levels\"} required");
    }
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        throw SchemaError("field \"n\": integer required");
    }
    LevelProfile lp;
    lp.n = j["n"].get<long long>();
    if (lp.n < 1) throw SchemaError("field \"n\": positive integer required");
    for (const auto& v : j["levels"]) {
        if (!v.is_number()) throw SchemaError("field \"levels\": numbers required");
        lp.levels.push_back(v.get<double>());
    }
    if (lp.levels.size() != static_cast<std::size_t>(lp.n) + 1) {
        throw SchemaError("field \"levels\": expected n + 1 entries");
    }
    return lp;
}

json profile_to_json(const LevelProfile& lp) {
    return json{{"n", lp.n}, {"levels", lp.levels}};
}

json report_to_json(const BoundReport& rep) {
    json ctx = json::object();
    for (const auto& [key, value] : rep.context) ctx[key] = value;
    json j{{"name", rep.name},     {"measured", rep.measured}, {"bound", rep.bound},
           {"slack", rep.slack},   {"pass", rep.pass},         {"context", std::move(ctx)}};
    if (!rep.applicable) j["applicable"] = false;
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

CubeFunction load_function(const std::string& path) {
    const json j = parse_file(path);
    if (j.is_object() && j.contains("levels")) {
        const LevelProfile lp = profile_from_json(j);
        if (lp.n > kMaxVariables) throw SchemaError("profile too wide for a dense table");
        return synthesize_levels(lp);
    }
    return function_from_json(j);
}

}  // namespace cubefun
