#include "document.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/sha.h>

namespace toric::io {

namespace {

const Json& field(const Json& doc, const char* name)
{
    if (!doc.contains(name))
        throw SchemaError("$", std::string("missing field '") + name + "'");
    return doc.at(name);
}

int parse_int(const Json& j, const std::string& where)
{
    if (!j.is_number_integer())
        throw SchemaError(where, "expected an integer");
    return j.get<int>();
}

}   // namespace

Json integer_json(const Integer& x)
{
    static const Integer limit = Integer(1) << 53;
    if (abs(x) < limit)
        return Json(x.convert_to<long long>());
    return Json(x.str());
}

Integer parse_integer(const Json& j, const std::string& where)
{
    if (j.is_number_integer())
        return Integer(j.get<long long>());
    if (j.is_string())
    {
        const std::string s = j.get<std::string>();
        const std::size_t digits = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (s.size() == digits || s.find_first_not_of("0123456789", digits) != std::string::npos)
            throw SchemaError(where, "'" + s + "' is not a decimal integer");
        return Integer(s[0] == '+' ? s.substr(1) : s);
    }
    throw SchemaError(where, "expected an integer or a decimal string");
}

CharacteristicPair parse_pair(const Json& doc)
{
    if (!doc.is_object())
        throw SchemaError("$", "document must be an object");

    const int n = parse_int(field(doc, "dimension"), "$.dimension");
    if (n < 1)
        throw SchemaError("$.dimension", "must be positive");

    const Json& facets = field(doc, "facets");
    if (!facets.is_array() || facets.empty())
        throw SchemaError("$.facets", "expected a nonempty array of labels");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < facets.size(); ++i)
    {
        if (!facets[i].is_string())
            throw SchemaError("$.facets[" + std::to_string(i) + "]", "expected a string");
        labels.push_back(facets[i].get<std::string>());
    }
    const int m = static_cast<int>(labels.size());
    if (m > IndexSet::kCapacity)
        throw SchemaError("$.facets", "at most 64 facets are supported");

    const Json& vertices = field(doc, "vertices");
    if (!vertices.is_array() || vertices.empty())
        throw SchemaError("$.vertices", "expected a nonempty array of facet-index lists");
    std::vector<IndexSet> verts;
    for (std::size_t v = 0; v < vertices.size(); ++v)
    {
        const std::string where = "$.vertices[" + std::to_string(v) + "]";
        if (!vertices[v].is_array() || vertices[v].size() != static_cast<std::size_t>(n))
            throw SchemaError(where, "expected " + std::to_string(n) + " facet indices");
        IndexSet s;
        for (std::size_t k = 0; k < vertices[v].size(); ++k)
        {
            const std::string at = where + "[" + std::to_string(k) + "]";
            const int f = parse_int(vertices[v][k], at);
            if (f < 0 || f >= m)
                throw SchemaError(at, "facet index " + std::to_string(f) + " out of range");
            if (s.contains(f))
                throw SchemaError(at, "facet index " + std::to_string(f) + " repeated");
            s.insert(f);
        }
        verts.push_back(s);
    }

    const Json& lambda = field(doc, "lambda");
    if (!lambda.is_array() || lambda.size() != static_cast<std::size_t>(m))
        throw SchemaError("$.lambda", "expected one vector per facet (" + std::to_string(m) + ")");
    IntMatrix matrix(n, m);
    for (int j = 0; j < m; ++j)
    {
        const std::string where = "$.lambda[" + std::to_string(j) + "]";
        const Json& row = lambda[static_cast<std::size_t>(j)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            throw SchemaError(where, "expected " + std::to_string(n) + " entries");
        for (int r = 0; r < n; ++r)
            matrix(r, j) = parse_integer(row[static_cast<std::size_t>(r)],
                                         where + "[" + std::to_string(r) + "]");
    }

    try
    {
        return CharacteristicPair(CombinatorialPolytope(n, std::move(labels), std::move(verts)),
                                  std::move(matrix));
    }
    catch (const SchemaError&)
    {
        throw;
    }
    catch (const Error& e)
    {
        throw SchemaError("$", e.what());
    }
}

Json to_document(const CharacteristicPair& pair)
{
    const CombinatorialPolytope& q = pair.polytope();
    Json doc;
    doc["dimension"] = q.dimension();
    doc["facets"] = q.facet_labels();
    Json verts = Json::array();
    for (const IndexSet& v : q.vertices())
        verts.push_back(v.to_vector());
    doc["vertices"] = verts;
    Json lambda = Json::array();
    for (int j = 0; j < q.facet_count(); ++j)
    {
        Json row = Json::array();
        for (Eigen::Index r = 0; r < pair.matrix().rows(); ++r)
            row.push_back(integer_json(pair.matrix()(r, j)));
        lambda.push_back(row);
    }
    doc["lambda"] = lambda;
    return doc;
}

std::vector<int> parse_vertex_order(const Json& doc)
{
    const Json* list = &doc;
    std::string where = "$";
    if (doc.is_object())
    {
        list = &field(doc, "sequence");
        where = "$.sequence";
    }
    if (!list->is_array())
        throw SchemaError(where, "expected an array of vertex indices");
    std::vector<int> out;
    for (std::size_t k = 0; k < list->size(); ++k)
    {
        const Json& entry = (*list)[k];
        const std::string at = where + "[" + std::to_string(k) + "]";
        // Accept report steps ({"vertex": i, ...}) as well as bare indices.
        if (entry.is_object() && entry.contains("vertex"))
            out.push_back(parse_int(entry.at("vertex"), at + ".vertex"));
        else
            out.push_back(parse_int(entry, at));
    }
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw SchemaError(path, "cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Json parse_json(const std::string& text, const std::string& source)
{
    try
    {
        return Json::parse(text);
    }
    catch (const nlohmann::json::parse_error& e)
    {
        throw SchemaError(source + " (byte " + std::to_string(e.byte) + ")", "invalid JSON");
    }
}

std::string sha256_hex(std::string_view data)
{
    unsigned char digest[SHA256_DIGEST_LENGTH];
    SHA256(reinterpret_cast<const unsigned char*>(data.data()), data.size(), digest);
    std::ostringstream out;
    for (unsigned char c : digest)
        out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(c);
    return out.str();
}

}   // namespace toric::io
