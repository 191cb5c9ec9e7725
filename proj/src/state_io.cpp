#include "realign/state_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace realignment {

namespace {

using nlohmann::json;

DimensionSignature parse_dims(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("dims must be an object with a string 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "bipartite") {
        if (!j.contains("m") || !j.contains("n") || !j["m"].is_number_integer() ||
            !j["n"].is_number_integer())
            throw ParseError("bipartite dims require integer fields m and n");
        const long long m = j["m"].get<long long>();
        const long long n = j["n"].get<long long>();
        if (m < 2 || n < 2) throw ParseError("bipartite dims require m, n >= 2");
        return DimensionSignature::bipartite(static_cast<std::size_t>(m),
                                             static_cast<std::size_t>(n));
    }
    if (kind == "tripartite-qubit") return DimensionSignature::tripartite_qubit();
    throw ParseError("dims.kind must be 'bipartite' or 'tripartite-qubit'");
}

} // namespace

StateFile parse_state_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("state file must be a JSON object");
    if (!j.contains("dims")) throw ParseError("state file missing 'dims'");
    if (!j.contains("entries") || !j["entries"].is_array())
        throw ParseError("state file missing 'entries' array");

    const DimensionSignature dims = parse_dims(j["dims"]);
    const std::size_t total = dims.total();
    const auto& entries = j["entries"];
    if (entries.size() != total * total) {
        std::ostringstream os;
        os << "expected " << total * total << " entries, found " << entries.size();
        throw ParseError(os.str());
    }

    std::vector<ComplexMatrix::Scalar> data;
    data.reserve(entries.size());
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw ParseError("each entry must be a [re, im] number pair");
        data.emplace_back(e[0].get<double>(), e[1].get<double>());
    }

    std::string label;
    if (j.contains("label")) {
        if (!j["label"].is_string()) throw ParseError("label must be a string");
        label = j["label"].get<std::string>();
    }

    ComplexMatrix m(total, total, std::move(data));
    return StateFile{DensityMatrix::validate(std::move(m), dims), std::move(label)};
}

StateFile read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open state file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state_json(buf.str());
}

std::string state_to_json(const DensityMatrix& rho, const std::string& label) {
    json j;
    const auto& dims = rho.dims();
    if (dims.is_bipartite())
        j["dims"] = {{"kind", "bipartite"}, {"m", dims.m()}, {"n", dims.n()}};
    else
        j["dims"] = {{"kind", "tripartite-qubit"}};
    if (!label.empty()) j["label"] = label;
    json entries = json::array();
    for (const auto& z : rho.matrix().entries()) entries.push_back({z.real(), z.imag()});
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

void write_state_file(const std::string& path, const DensityMatrix& rho,
                      const std::string& label) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    out << state_to_json(rho, label);
}

} // namespace realignment
