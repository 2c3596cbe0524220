#include "maskcheck/wire_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace maskcheck {

using nlohmann::json;

namespace {

std::uint64_t require_uint(const json& doc, const char* key) {
    const auto it = doc.find(key);
    if (it == doc.end()) throw WireFormatError(std::string("missing field \"") + key + "\"");
    if (!it->is_number_unsigned()) {
        throw WireFormatError(std::string("field \"") + key + "\" must be a non-negative integer");
    }
    return it->get<std::uint64_t>();
}

}  // namespace

WireFunction parse_wire_json(std::string_view text, std::uint64_t max_cells) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw WireFormatError(std::string("JSON parse error: ") + e.what(), e.byte);
    }
    if (!doc.is_object()) throw WireFormatError("wire file must hold a JSON object");

    const std::uint64_t q = require_uint(doc, "q");
    if (q == 0) throw WireFormatError("q must be positive");
    if (q > Modulus::kMax) throw WireFormatError("q exceeds 2^32");
    const std::uint64_t alphabet = doc.contains("alphabet") ? require_uint(doc, "alphabet") : 2;
    if (alphabet == 0 || alphabet > 0xFFFFFFFFu) throw WireFormatError("alphabet must be in [1, 2^32)");
    if (doc.contains("order")) {
        const auto& order = doc["order"];
        if (!order.is_string() || order.get<std::string>() != "s0_major") {
            throw WireFormatError("unsupported table order; only \"s0_major\" is defined");
        }
    }
    const auto it = doc.find("table");
    if (it == doc.end() || !it->is_array()) throw WireFormatError("field \"table\" must be an array");

    const Modulus modulus(q);
    try {
        WireFunction::check_size(modulus, max_cells);
    } catch (const CapExceeded& e) {
        throw WireFormatError(e.what());
    }
    const std::uint64_t expected = q * q;
    if (it->size() != expected) {
        throw WireFormatError("table has " + std::to_string(it->size()) + " entries, expected q^2 = " +
                              std::to_string(expected));
    }
    std::vector<Symbol> table;
    table.reserve(expected);
    for (std::size_t i = 0; i < it->size(); ++i) {
        const auto& cell = (*it)[i];
        if (!cell.is_number_unsigned() || cell.get<std::uint64_t>() >= alphabet) {
            throw WireFormatError("table entry " + std::to_string(i) + " (s0 = " + std::to_string(i / q) +
                                  ", s1 = " + std::to_string(i % q) + ") is not a symbol below " +
                                  std::to_string(alphabet));
        }
        table.push_back(cell.get<Symbol>());
    }
    return WireFunction(modulus, static_cast<Symbol>(alphabet), std::move(table), max_cells);
}

WireFunction load_wire_file(const std::string& path, std::uint64_t max_cells) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw WireFormatError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_wire_json(buf.str(), max_cells);
}

std::string wire_to_json(const WireFunction& w) {
    nlohmann::ordered_json doc;
    doc["q"] = w.modulus().value();
    doc["alphabet"] = w.alphabet();
    doc["order"] = "s0_major";
    doc["table"] = std::vector<Symbol>(w.table().begin(), w.table().end());
    return doc.dump();
}

}  // namespace maskcheck
