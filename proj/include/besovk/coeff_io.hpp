#ifndef BESOVK_COEFF_IO_HPP
#define BESOVK_COEFF_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "besovk/coeffs.hpp"
#include "besovk/format.hpp"

namespace besovk {

/// Parse the JSON coefficient document {"n": int, "layers": [{"j": int, "coeffs": [...]}, ...]}.
inline CoeffField coeffs_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("layers"))
        throw DataError("coefficient file: expected object with \"n\" and \"layers\"");
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1)
        throw DataError("coefficient file: \"n\" must be a positive integer");
    const int n = doc["n"].get<int>();
    const auto& ls = doc["layers"];
    if (!ls.is_array() || ls.empty()) throw DataError("coefficient file: \"layers\" must be a nonempty array");

    std::vector<std::size_t> sizes;
    std::vector<std::vector<double>> layers;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        const auto& l = ls[i];
        if (!l.is_object() || !l.contains("j") || !l.contains("coeffs"))
            throw DataError("coefficient file: layer entries need \"j\" and \"coeffs\"");
        if (!l["j"].is_number_integer()) throw DataError("coefficient file: \"j\" must be an integer");
        const long long j = l["j"].get<long long>();
        if (j < static_cast<long long>(i))
            throw DataError("coefficient file: duplicate or unsorted layer j=" + std::to_string(j));
        if (j > static_cast<long long>(i))
            throw DataError("coefficient file: gap before layer j=" + std::to_string(j));
        const auto& c = l["coeffs"];
        if (!c.is_array() || c.empty()) throw DataError("coefficient file: layer " + std::to_string(j) + " has no coeffs");
        std::vector<double> v;
        for (const auto& x : c) {
            if (!x.is_number()) throw DataError("coefficient file: non-numeric coefficient");
            double d = x.get<double>();
            if (!(d >= 0.0) || !std::isfinite(d))
                throw DataError("coefficient file: negative or non-finite coefficient in layer " + std::to_string(j));
            v.push_back(d);
        }
        sizes.push_back(v.size());
        layers.push_back(std::move(v));
    }
    return CoeffField(GridSpec(n, std::move(sizes)), std::move(layers));
}

inline CoeffField read_coeff_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open coefficient file '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError("coefficient file '" + path + "': " + e.what());
    }
    return coeffs_from_json(doc);
}

/// Canonical text; numbers use shortest round-trip form so files reread bit-exactly.
inline std::string coeffs_to_json_text(const CoeffField& f) {
    std::ostringstream os;
    os << "{\"n\": " << f.n() << ", \"layers\": [";
    for (std::size_t j = 0; j < f.layers(); ++j) {
        if (j) os << ", ";
        os << "{\"j\": " << j << ", \"coeffs\": [";
        const auto& l = f.layer(j);
        for (std::size_t k = 0; k < l.size(); ++k) {
            if (k) os << ", ";
            os << format_double(l[k]);
        }
        os << "]}";
    }
    os << "]}\n";
    return os.str();
}

}  // namespace besovk

#endif  // BESOVK_COEFF_IO_HPP
