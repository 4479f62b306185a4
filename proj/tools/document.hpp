#ifndef TORIC_TOOLS_DOCUMENT_HPP
#define TORIC_TOOLS_DOCUMENT_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "toric/charpair.hpp"
#include "toric/retraction.hpp"

namespace toric::io {

using Json = nlohmann::ordered_json;

/// Malformed input document; `where` is a JSON-pointer-like location.
class SchemaError : public Error
{
public:
    SchemaError(std::string where, const std::string& what)
        : Error(where + ": " + what), where_(std::move(where))
    {}

    const std::string& where() const { return where_; }

private:
    std::string where_;
};

/// Integers that fit in 53 bits are emitted as numbers, larger ones as strings.
Json integer_json(const Integer& x);
Integer parse_integer(const Json& j, const std::string& where);

/**
 * Pair document:
 * { "dimension": n, "facets": [label], "vertices": [[facet index]],
 *   "lambda": [[integer]] } with one lambda vector per facet.
 */
CharacteristicPair parse_pair(const Json& doc);
Json to_document(const CharacteristicPair& pair);

/// Sequence document: { "sequence": [vertex index, ...] } or a bare array.
std::vector<int> parse_vertex_order(const Json& doc);

std::string read_file(const std::string& path);
Json parse_json(const std::string& text, const std::string& source);

std::string sha256_hex(std::string_view data);

}   // namespace toric::io

#endif
