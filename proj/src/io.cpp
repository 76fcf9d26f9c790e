#include "hyper/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace hyper::io {

namespace {

constexpr double kMaxExactInteger = 9007199254740992.0;  // 2^53

std::string key_path(const std::string& parent, const std::string& key) { return parent + "[\"" + key + "\"]"; }

const Json& require(const Json& doc, const char* key, const std::string& path) {
    if (!doc.is_object()) throw SchemaError(path, "expected an object");
    const auto it = doc.find(key);
    if (it == doc.end()) throw SchemaError(path + "." + key, "missing required field");
    return *it;
}

std::optional<long long> parse_integer(std::string_view text) {
    long long value = 0;
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty()) return std::nullopt;
    return value;
}

// Smallest-denominator p/q whose correctly rounded quotient is exactly value.
std::optional<std::pair<long long, long long>> exact_rational(double value) {
    const double target = std::abs(value);
    double x = target;
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int iter = 0; iter < 64; ++iter) {
        const double a = std::floor(x);
        if (a > kMaxExactInteger) break;
        const auto ai = static_cast<long long>(a);
        const double p2d = static_cast<double>(ai) * static_cast<double>(p1) + static_cast<double>(p0);
        const double q2d = static_cast<double>(ai) * static_cast<double>(q1) + static_cast<double>(q0);
        if (p2d > kMaxExactInteger || q2d > 1e12) break;
        const long long p2 = ai * p1 + p0;
        const long long q2 = ai * q1 + q0;
        if (static_cast<double>(p2) / static_cast<double>(q2) == target) {
            return std::make_pair(value < 0 ? -p2 : p2, q2);
        }
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        const double frac = x - a;
        if (frac <= 0.0) break;
        x = 1.0 / frac;
    }
    return std::nullopt;
}

}  // namespace

Json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& err) {
        throw StructuralError(path.string() + ": invalid JSON: " + err.what());
    }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

void save_json(const std::filesystem::path& path, const Json& doc) {
    std::ofstream out(path);
    if (!out) throw StructuralError("cannot write " + path.string());
    out << dump(doc);
}

Json encode_real(double value) {
    if (value == 0.0) return 0;
    if (std::isfinite(value) && std::abs(value) < kMaxExactInteger && std::floor(value) == value) {
        return static_cast<long long>(value);
    }
    if (std::isfinite(value)) {
        if (const auto r = exact_rational(value)) {
            return std::to_string(r->first) + "/" + std::to_string(r->second);
        }
    }
    return value;
}

double decode_real(const Json& value, const std::string& path) {
    if (value.is_number()) return value.get<double>();
    if (value.is_string()) {
        const auto text = value.get<std::string>();
        const auto slash = text.find('/');
        if (slash == std::string::npos) {
            if (const auto p = parse_integer(text)) return static_cast<double>(*p);
            throw SchemaError(path, "expected a number or a \"p/q\" string, got \"" + text + "\"");
        }
        const auto p = parse_integer(std::string_view(text).substr(0, slash));
        const auto q = parse_integer(std::string_view(text).substr(slash + 1));
        if (!p || !q || *q <= 0) throw SchemaError(path, "malformed rational \"" + text + "\"");
        return static_cast<double>(*p) / static_cast<double>(*q);
    }
    throw SchemaError(path, "expected a number or a \"p/q\" string");
}

Json serialize(const FiniteHypergroup& h) {
    const auto n = h.size();
    Json doc;
    doc["labels"] = h.labels();
    doc["identity"] = h.label(h.identity());
    Json involution = Json::object();
    for (Index x = 0; x < n; ++x) involution[h.label(x)] = h.label(h.inv(x));
    doc["involution"] = std::move(involution);
    Json convolution = Json::object();
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            Json masses = Json::object();
            for (Index z = 0; z < n; ++z) {
                const double m = h.c(x, y, z);
                if (m != 0.0) masses[h.label(z)] = encode_real(m);
            }
            convolution[h.label(x) + "|" + h.label(y)] = std::move(masses);
        }
    }
    doc["convolution"] = std::move(convolution);
    if (h.has_haar()) {
        Json haar = Json::object();
        for (Index x = 0; x < n; ++x) haar[h.label(x)] = encode_real(h.haar(x));
        doc["haar"] = std::move(haar);
    }
    return doc;
}

FiniteHypergroup parse_structure(const Json& doc) {
    const std::string root = "$";
    if (!doc.is_object()) throw SchemaError(root, "expected an object");

    const auto& labels_doc = require(doc, "labels", root);
    if (!labels_doc.is_array() || labels_doc.empty()) throw SchemaError("$.labels", "expected a nonempty array");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < labels_doc.size(); ++i) {
        if (!labels_doc[i].is_string()) throw SchemaError("$.labels[" + std::to_string(i) + "]", "expected a string");
        labels.push_back(labels_doc[i].get<std::string>());
    }
    const auto n = labels.size();
    auto index_of = [&](const std::string& label, const std::string& path) -> Index {
        for (Index i = 0; i < n; ++i)
            if (labels[i] == label) return i;
        throw SchemaError(path, "unknown label \"" + label + "\"");
    };

    const auto& identity_doc = require(doc, "identity", root);
    if (!identity_doc.is_string()) throw SchemaError("$.identity", "expected a label string");
    const Index identity = index_of(identity_doc.get<std::string>(), "$.identity");

    const auto& inv_doc = require(doc, "involution", root);
    if (!inv_doc.is_object()) throw SchemaError("$.involution", "expected an object");
    constexpr Index kUnset = static_cast<Index>(-1);
    std::vector<Index> involution(n, kUnset);
    for (const auto& [key, value] : inv_doc.items()) {
        const auto path = key_path("$.involution", key);
        const Index x = index_of(key, path);
        if (!value.is_string()) throw SchemaError(path, "expected a label string");
        involution[x] = index_of(value.get<std::string>(), path);
    }
    for (Index x = 0; x < n; ++x) {
        if (involution[x] == kUnset) throw SchemaError(key_path("$.involution", labels[x]), "missing entry");
    }

    const auto& conv_doc = require(doc, "convolution", root);
    if (!conv_doc.is_object()) throw SchemaError("$.convolution", "expected an object");
    std::vector<double> constants(n * n * n, 0.0);
    for (const auto& [key, masses] : conv_doc.items()) {
        const auto path = key_path("$.convolution", key);
        std::optional<std::pair<Index, Index>> pair;
        for (std::size_t bar = key.find('|'); bar != std::string::npos; bar = key.find('|', bar + 1)) {
            const auto left = key.substr(0, bar);
            const auto right = key.substr(bar + 1);
            const auto li = std::find(labels.begin(), labels.end(), left);
            const auto ri = std::find(labels.begin(), labels.end(), right);
            if (li == labels.end() || ri == labels.end()) continue;
            if (pair) throw SchemaError(path, "ambiguous \"x|y\" key");
            pair = std::make_pair(static_cast<Index>(li - labels.begin()), static_cast<Index>(ri - labels.begin()));
        }
        if (!pair) throw SchemaError(path, "key is not of the form \"x|y\" with known labels");
        if (!masses.is_object()) throw SchemaError(path, "expected an object label -> mass");
        for (const auto& [zlabel, mass] : masses.items()) {
            const auto mpath = key_path(path, zlabel);
            const Index z = index_of(zlabel, mpath);
            constants[(pair->first * n + pair->second) * n + z] = decode_real(mass, mpath);
        }
    }

    std::vector<double> haar;
    if (const auto it = doc.find("haar"); it != doc.end()) {
        if (!it->is_object()) throw SchemaError("$.haar", "expected an object label -> weight");
        haar.assign(n, 0.0);
        std::vector<bool> seen(n, false);
        for (const auto& [key, value] : it->items()) {
            const auto path = key_path("$.haar", key);
            const Index x = index_of(key, path);
            haar[x] = decode_real(value, path);
            seen[x] = true;
        }
        for (Index x = 0; x < n; ++x)
            if (!seen[x]) throw SchemaError(key_path("$.haar", labels[x]), "missing weight");
    }

    try {
        return FiniteHypergroup(std::move(labels), std::move(constants), std::move(involution), identity,
                                std::move(haar));
    } catch (const StructuralError& err) {
        throw SchemaError(root, err.what());
    }
}

FiniteHypergroup parse(const Json& doc, double tol) {
    auto h = parse_structure(doc);
    require_structure_axioms(h, tol);
    if (h.has_haar()) {
        auto report = validate_axioms(h, tol);
        if (!report.passed()) throw AxiomError("supplied Haar weights are not left invariant", std::move(report));
        return h;
    }
    return h.with_haar(compute_haar(h));
}

Json serialize_cayley(const CayleyTable& table) {
    Json doc;
    doc["elements"] = table.labels;
    Json rows = Json::array();
    for (const auto& row : table.table) {
        Json r = Json::array();
        for (Index z : row) r.push_back(table.labels.at(z));
        rows.push_back(std::move(r));
    }
    doc["table"] = std::move(rows);
    return doc;
}

CayleyTable parse_cayley(const Json& doc) {
    const auto& elements = require(doc, "elements", "$");
    if (!elements.is_array() || elements.empty()) throw SchemaError("$.elements", "expected a nonempty array");
    CayleyTable t;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (!elements[i].is_string()) throw SchemaError("$.elements[" + std::to_string(i) + "]", "expected a string");
        t.labels.push_back(elements[i].get<std::string>());
    }
    const auto n = t.labels.size();
    const auto& rows = require(doc, "table", "$");
    if (!rows.is_array() || rows.size() != n) throw SchemaError("$.table", "expected " + std::to_string(n) + " rows");
    for (std::size_t i = 0; i < n; ++i) {
        const auto rpath = "$.table[" + std::to_string(i) + "]";
        if (!rows[i].is_array() || rows[i].size() != n) {
            throw SchemaError(rpath, "expected " + std::to_string(n) + " entries");
        }
        std::vector<Index> row;
        for (std::size_t j = 0; j < n; ++j) {
            const auto epath = rpath + "[" + std::to_string(j) + "]";
            if (!rows[i][j].is_string()) throw SchemaError(epath, "expected a label string");
            const auto label = rows[i][j].get<std::string>();
            const auto it = std::find(t.labels.begin(), t.labels.end(), label);
            if (it == t.labels.end()) throw SchemaError(epath, "unknown label \"" + label + "\"");
            row.push_back(static_cast<Index>(it - t.labels.begin()));
        }
        t.table.push_back(std::move(row));
    }
    return t;
}

Json encode_complex(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex decode_complex(const Json& value, const std::string& path) {
    if (value.is_array()) {
        if (value.size() != 2) throw SchemaError(path, "complex values are [re, im]");
        return {decode_real(value[0], path + "[0]"), decode_real(value[1], path + "[1]")};
    }
    return {decode_real(value, path), 0.0};
}

PointFunction parse_function(const FiniteHypergroup& h, const Json& doc) {
    const auto& values = require(doc, "values", "$");
    if (!values.is_object()) throw SchemaError("$.values", "expected an object label -> value");
    PointFunction f{std::vector<Complex>(h.size())};
    for (const auto& [key, value] : values.items()) {
        const auto path = key_path("$.values", key);
        const auto x = h.find(key);
        if (!x) throw SchemaError(path, "unknown label \"" + key + "\"");
        f[*x] = decode_complex(value, path);
    }
    return f;
}

Json serialize_function(const FiniteHypergroup& h, const PointFunction& f) {
    if (f.size() != h.size()) throw StructuralError("function length does not match hypergroup size");
    Json values = Json::object();
    for (Index x = 0; x < h.size(); ++x) values[h.label(x)] = encode_complex(f[x]);
    Json doc;
    doc["values"] = std::move(values);
    return doc;
}

Json serialize_coefficients(const FourierCoefficients& coeffs) {
    Json arr = Json::array();
    for (const auto& z : coeffs.values) arr.push_back(encode_complex(z));
    Json doc;
    doc["coefficients"] = std::move(arr);
    return doc;
}

FourierCoefficients parse_coefficients(const Json& doc) {
    const auto& arr = require(doc, "coefficients", "$");
    if (!arr.is_array()) throw SchemaError("$.coefficients", "expected an array");
    FourierCoefficients out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        out.values.push_back(decode_complex(arr[i], "$.coefficients[" + std::to_string(i) + "]"));
    }
    return out;
}

std::vector<double> parse_gamma(const Json& doc) {
    const auto& arr = require(doc, "gamma", "$");
    if (!arr.is_array()) throw SchemaError("$.gamma", "expected an array");
    std::vector<double> gamma;
    for (std::size_t i = 0; i < arr.size(); ++i) gamma.push_back(decode_real(arr[i], "$.gamma[" + std::to_string(i) + "]"));
    return gamma;
}

Json serialize_report(const FiniteHypergroup& h, const ValidationReport& report) {
    Json doc;
    doc["pass"] = report.passed();
    doc["tolerance"] = report.tolerance;
    Json checks = Json::object();
    for (const auto& c : report.checks) {
        Json entry;
        entry["evaluated"] = c.evaluated;
        entry["residual"] = c.residual;
        entry["pass"] = !c.evaluated || c.passed;
        Json offenders = Json::array();
        for (const auto& t : c.offenders) {
            Json triple = Json::array();
            for (Index i : t) triple.push_back(i < h.size() ? Json(h.label(i)) : Json(i));
            offenders.push_back(std::move(triple));
        }
        entry["offenders"] = std::move(offenders);
        checks[c.name] = std::move(entry);
    }
    doc["checks"] = std::move(checks);
    return doc;
}

Json serialize_partition(const FiniteHypergroup& g, const DoubleCosetPartition& partition) {
    Json blocks = Json::array();
    for (const auto& block : partition.blocks) {
        Json b = Json::array();
        for (Index x : block) b.push_back(g.label(x));
        blocks.push_back(std::move(b));
    }
    return blocks;
}

Json serialize_dual(const GelfandPair& pair, const DualData& dual) {
    Json doc;
    doc["blocks"] = serialize_partition(pair.group(), pair.partition());
    Json chars = Json::array();
    for (const auto& phi : dual.characters) {
        Json row = Json::array();
        for (const auto& v : phi.values) row.push_back(encode_complex(v));
        chars.push_back(std::move(row));
    }
    doc["characters"] = std::move(chars);
    doc["plancherel"] = dual.plancherel;
    doc["seed"] = dual.seed_used;
    return doc;
}

Json serialize_embedding(const EmbeddingReport& report) {
    Json doc;
    doc["lhs"] = report.lhs;
    doc["rhs"] = report.rhs;
    doc["constant"] = report.constant;
    doc["margin"] = report.margin;
    doc["pass"] = report.pass;
    return doc;
}

}  // namespace hyper::io
