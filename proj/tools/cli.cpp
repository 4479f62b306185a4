#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "document.hpp"
#include "toric/retraction.hpp"
#include "toric/wsr.hpp"

namespace toric::cli {

namespace {

using io::Json;

struct Options
{
    std::string format = "human";
    std::uint64_t budget = kDefaultBudget;
    std::string input;
    std::string j;
    std::string chi;
    std::string prime;
    std::string facet;
    std::string from;
    int degree = 1;
};

/// A command's outcome before rendering.
struct Report
{
    std::string command;
    std::string input_hash;
    Json results = Json::object();
    Json witnesses = Json::object();
    std::string human;
    int code = kOk;
};

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
    {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        out.push_back(item);
    }
    return out;
}

std::vector<Integer> parse_integers(const std::string& text, const std::string& flag)
{
    std::vector<Integer> out;
    for (const std::string& item : split_list(text))
        out.push_back(io::parse_integer(Json(item), flag));
    if (out.empty())
        throw io::SchemaError(flag, "expected a comma-separated list of integers");
    return out;
}

JVector parse_j(const std::string& text, int facets)
{
    std::vector<int> entries;
    for (const Integer& x : parse_integers(text, "--J"))
    {
        if (x < 1 || x > IndexSet::kCapacity)
            throw io::SchemaError("--J", "entries must be between 1 and 64");
        entries.push_back(x.convert_to<int>());
    }
    if (static_cast<int>(entries.size()) != facets)
        throw io::SchemaError("--J", "expected " + std::to_string(facets) + " entries, got "
                                         + std::to_string(entries.size()));
    return JVector(std::move(entries));
}

Integer parse_prime(const std::string& text)
{
    const Integer p = io::parse_integer(Json(text), "--prime");
    const std::vector<Integer> factors = prime_factors(p);
    if (p < 2 || factors.size() != 1 || factors.front() != p)
        throw io::SchemaError("--prime", p.str() + " is not a prime");
    return p;
}

/// Left-aligns to `width` columns, counting UTF-8 code points.
std::string pad(const std::string& s, std::size_t width)
{
    const auto columns = static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
    return columns >= width ? s + " " : s + std::string(width - columns, ' ');
}

std::string vertex_name(int v)
{
    return "v" + std::to_string(v + 1);
}

std::string face_name(const CombinatorialPolytope& q, const Face& e)
{
    if (e.facets.empty())
        return "Q";
    std::string out;
    for (int f : e.facets.to_vector())
        out += (out.empty() ? "" : "∩") + q.facet_label(f);
    return out;
}

Json face_json(const CombinatorialPolytope& q, const Face& e)
{
    Json out = Json::array();
    for (int f : e.facets.to_vector())
        out.push_back(q.facet_label(f));
    return out;
}

Json orders_json(const std::vector<Integer>& orders)
{
    Json out = Json::array();
    for (const Integer& o : orders)
        out.push_back(io::integer_json(o));
    return out;
}

Json sequence_json(const CharacteristicPair& pair, const RetractionSequence& seq)
{
    const std::vector<Integer> orders = step_orders(pair, seq);
    Json out = Json::array();
    for (std::size_t k = 0; k < seq.size(); ++k)
    {
        Json step;
        step["vertex"] = seq[k].vertex;
        step["face"] = face_json(pair.polytope(), seq[k].face);
        step["dimension"] = pair.polytope().face_dimension(seq[k].face);
        step["order"] = io::integer_json(orders[k]);
        out.push_back(step);
    }
    return out;
}

std::string sequence_table(const CharacteristicPair& pair, const RetractionSequence& seq)
{
    const std::vector<Integer> orders = step_orders(pair, seq);
    std::ostringstream out;
    out << std::left << std::setw(6) << "step" << std::setw(8) << "vertex" << std::setw(20) << "face"
        << std::setw(5) << "dim" << "order\n";
    for (std::size_t k = 0; k < seq.size(); ++k)
        out << std::setw(6) << k + 1 << std::setw(8) << vertex_name(seq[k].vertex) << pad(face_name(pair.polytope(), seq[k].face), 20) << std::setw(5)
            << pair.polytope().face_dimension(seq[k].face) << orders[k] << "\n";
    return out.str();
}

std::string join(const std::vector<std::string>& items, const std::string& sep)
{
    std::string out;
    for (const std::string& s : items)
        out += (out.empty() ? "" : sep) + s;
    return out;
}

template <typename T>
std::string join_values(const std::vector<T>& items, const std::string& sep = ", ")
{
    std::vector<std::string> parts;
    for (const T& x : items)
    {
        std::ostringstream s;
        s << x;
        parts.push_back(s.str());
    }
    return join(parts, sep);
}

std::vector<std::string> variable_names(const std::string& prefix, int count, int first = 1)
{
    std::vector<std::string> out;
    for (int k = 0; k < count; ++k)
        out.push_back(prefix + std::to_string(k + first));
    return out;
}

Json polynomials_json(const std::vector<Polynomial>& ps, const std::vector<std::string>& names)
{
    Json out = Json::array();
    for (const Polynomial& p : ps)
        out.push_back(to_string(p, names));
    return out;
}

struct Loaded
{
    CharacteristicPair pair;
    std::string hash;
};

Loaded load(const Options& o)
{
    const std::string text = io::read_file(o.input);
    return {io::parse_pair(io::parse_json(text, o.input)), io::sha256_hex(text)};
}

/// Fills the report for a condition violation and returns true if there is one.
bool condition_violated(const CharacteristicPair& pair, Report& r)
{
    const ConditionReport c = validate(pair);
    if (c.ok)
        return false;
    std::vector<std::string> labels;
    for (int f : c.facets.to_vector())
        labels.push_back(pair.polytope().facet_label(f));
    r.results["valid"] = false;
    r.witnesses["vertex"] = c.vertex;
    r.witnesses["facets"] = labels;
    r.human += "invalid: characteristic vectors are linearly dependent at " + vertex_name(c.vertex)
             + " (" + join(labels, ", ") + ")\n";
    r.code = kCondition;
    return true;
}

void cmd_validate(const Options& o, Report& r)
{
    const Loaded in = load(o);
    r.input_hash = in.hash;
    if (condition_violated(in.pair, r))
        return;
    r.results["valid"] = true;
    r.results["vertices"] = in.pair.vertex_count();
    r.results["vertex_orders"] = orders_json(vertex_orders(in.pair));
    r.human = "valid: the condition holds at all " + std::to_string(in.pair.vertex_count()) + " vertices\n";
}

void cmd_orders(const Options& o, Report& r)
{
    const Loaded in = load(o);
    r.input_hash = in.hash;
    if (condition_violated(in.pair, r))
        return;
    const CombinatorialPolytope& q = in.pair.polytope();
    Json local = Json::array();
    std::ostringstream table;
    table << std::left << std::setw(20) << "face" << std::setw(8) << "vertex" << "order\n";
    for (const LocalOrder& lo : all_local_orders(in.pair))
    {
        if (q.face_dimension(lo.face) == 0)
            continue;
        Json entry;
        entry["face"] = face_json(q, lo.face);
        entry["vertex"] = lo.vertex;
        entry["order"] = io::integer_json(lo.order);
        local.push_back(entry);
        table << pad(face_name(q, lo.face), 20) << std::setw(8) << vertex_name(lo.vertex) << lo.order
              << "\n";
    }
    r.results["vertex_orders"] = orders_json(vertex_orders(in.pair));
    r.results["local_orders"] = local;
    r.human = table.str();
}

void cmd_wedge(const Options& o, Report& r)
{
    const Loaded in = load(o);
    r.input_hash = in.hash;
    const JVector j = parse_j(o.j, in.pair.facet_count());
    if (condition_violated(in.pair, r))
        return;
    const CharacteristicPair wedged = lambda_J(in.pair, j);
    r.results["J"] = j.entries();
    r.results["document"] = io::to_document(wedged);
    r.human = io::to_document(wedged).dump(2) + "\n";
}

void cmd_wps(const Options& o, Report& r)
{
    const std::vector<Integer> chi = parse_integers(o.chi, "--chi");
    CharacteristicPair pair = wps_pair(chi);
    std::string key = "wps --chi " + o.chi;
    if (!o.j.empty())
    {
        pair = lambda_J(pair, parse_j(o.j, pair.facet_count()));
        key += " --J " + o.j;
    }
    r.input_hash = io::sha256_hex(key);
    r.results["chi"] = orders_json(chi);
    if (!o.j.empty())
        r.results["J"] = parse_j(o.j, static_cast<int>(chi.size())).entries();
    r.results["document"] = io::to_document(pair);
    r.results["vertex_orders"] = orders_json(vertex_orders(pair));
    r.human = io::to_document(pair).dump(2) + "\n";
}

void cmd_formality(const Options& o, Report& r)
{
    const Loaded in = load(o);
    r.input_hash = in.hash;
    if (condition_violated(in.pair, r))
        return;

    if (!o.prime.empty())
    {
        const Integer p = parse_prime(o.prime);
        const SearchResult s = find_sequence_avoiding(in.pair, p, o.budget);
        r.results["prime"] = io::integer_json(p);
        r.results["status"] = to_string(s.status);
        r.results["expansions"] = s.expansions;
        std::ostringstream h;
        h << "p = " << p << ": ";
        if (s.status == SearchStatus::found)
        {
            r.witnesses[p.str()] = sequence_json(in.pair, s.sequence);
            h << "p-avoiding retraction sequence found\n" << sequence_table(in.pair, s.sequence);
        }
        else if (s.status == SearchStatus::none)
        {
            h << "no p-avoiding retraction sequence exists (criterion inconclusive)\n";
        }
        else
        {
            h << "search budget exhausted after " << s.expansions << " expansions (inconclusive)\n";
            r.code = kBudget;
        }
        r.human = h.str();
        return;
    }

    const FormalityReport f = formality_check(in.pair, o.budget);
    r.results["status"] = to_string(f.status);
    r.results["relevant_primes"] = orders_json(f.relevant_primes);
    Json per_prime = Json::object();
    std::ostringstream h;
    h << to_string(f.status) << "\n";
    h << "relevant primes: " << (f.relevant_primes.empty() ? "none" : join_values(f.relevant_primes)) << "\n";
    for (const auto& [p, s] : f.searches)
    {
        per_prime[p.str()] = to_string(s.status);
        h << "\np = " << p << ": " << to_string(s.status) << "\n";
        if (s.status == SearchStatus::found)
        {
            r.witnesses[p.str()] = sequence_json(in.pair, s.sequence);
            h << sequence_table(in.pair, s.sequence);
        }
    }
    r.results["searches"] = per_prime;
    r.witnesses["generic"] = sequence_json(in.pair, f.generic);
    if (f.relevant_primes.empty())
        h << "\nevery step of any sequence has order 1:\n" << sequence_table(in.pair, f.generic);
    if (f.status == FormalityStatus::budget)
        r.code = kBudget;
    r.human = h.str();
}

void cmd_retraction(const Options& o, Report& r)
{
    const Loaded in = load(o);
    r.input_hash = in.hash;
    if (condition_violated(in.pair, r))
        return;
    if (o.prime.empty())
    {
        const RetractionSequence seq = generic_sequence(in.pair.polytope());
        r.results["status"] = "found";
        r.witnesses["sequence"] = sequence_json(in.pair, seq);
        r.human = sequence_table(in.pair, seq);
        return;
    }
    const Integer p = parse_prime(o.prime);
    const SearchResult s = find_sequence_avoiding(in.pair, p, o.budget);
    r.results["prime"] = io::integer_json(p);
    r.results["status"] = to_string(s.status);
    r.results["expansions"] = s.expansions;
    if (s.status == SearchStatus::found)
    {
        r.witnesses["sequence"] = sequence_json(in.pair, s.sequence);
        r.human = sequence_table(in.pair, s.sequence);
    }
    else if (s.status == SearchStatus::none)
    {
        r.human = "no retraction sequence avoids p = " + p.str() + "\n";
    }
    else
    {
        r.human = "search budget exhausted (inconclusive)\n";
        r.code = kBudget;
    }
}

int resolve_facet(const CombinatorialPolytope& q, const std::string& text)
{
    for (int f = 0; f < q.facet_count(); ++f)
        if (q.facet_label(f) == text)
            return f;
    if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos)
    {
        const int f = std::stoi(text);
        if (f < q.facet_count())
            return f;
    }
    throw io::SchemaError("--facet", "unknown facet '" + text + "'");
}

void cmd_lift(const Options& o, Report& r)
{
    const Loaded in = load(o);
    r.input_hash = in.hash;
    if (condition_violated(in.pair, r))
        return;
    const CombinatorialPolytope& q = in.pair.polytope();
    const int facet = resolve_facet(q, o.facet);
    const std::vector<int> order = io::parse_vertex_order(io::parse_json(io::read_file(o.from), o.from));
    RetractionSequence base;
    try
    {
        base = sequence_from_vertices(q, order);
    }
    catch (const Error& e)
    {
        throw io::SchemaError(o.from, std::string("not a retraction sequence: ") + e.what());
    }
    const RetractionSequence lifted = lift_sequence(q, base, facet);
    const CharacteristicPair wedge = lambda_J(in.pair, JVector::single(q.facet_count(), facet));

    std::set<Integer> primes;
    for (const Integer& x : vertex_orders(in.pair))
        for (const Integer& p : prime_factors(x))
            primes.insert(p);
    Json checks = Json::array();
    std::ostringstream h;
    h << "base sequence on " << q.facet_count() << " facets:\n" << sequence_table(in.pair, base);
    h << "\nlift to the wedge at " << q.facet_label(facet) << ":\n" << sequence_table(wedge, lifted);
    for (const Integer& p : primes)
    {
        const bool before = avoids_prime(in.pair, base, p);
        const bool after = avoids_prime(wedge, lifted, p);
        Json c;
        c["prime"] = io::integer_json(p);
        c["base_avoids"] = before;
        c["lift_avoids"] = after;
        checks.push_back(c);
        h << "p = " << p << ": base " << (before ? "avoids" : "does not avoid") << ", lift "
          << (after ? "avoids" : "does not avoid") << "\n";
    }
    r.results["facet"] = q.facet_label(facet);
    r.results["wedge"] = io::to_document(wedge);
    r.results["primes"] = checks;
    r.witnesses["base"] = sequence_json(in.pair, base);
    r.witnesses["lifted"] = sequence_json(wedge, lifted);
    r.human = h.str();
}

std::string z_table(const CharacteristicPair& pair, const std::vector<std::string>& u)
{
    std::ostringstream out;
    for (int v = 0; v < pair.vertex_count(); ++v)
    {
        const RatMatrix z = z_vector(pair, v);
        out << vertex_name(v) << ":";
        for (Eigen::Index j = 0; j < z.rows(); ++j)
            out << (j ? ", " : " ") << to_string(Polynomial::linear(RatVector(z.row(j).transpose())), u);
        out << "\n";
    }
    return out.str();
}

Json basis_json(const GradedLatticeBasis& b, const std::vector<std::string>& x)
{
    Json out;
    out["degree"] = b.degree;
    out["denominator"] = io::integer_json(b.denominator);
    out["monomials"] = b.monomials;
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < b.basis.rows(); ++i)
    {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < b.basis.cols(); ++k)
            row.push_back(io::integer_json(b.basis(i, k)));
        rows.push_back(row);
    }
    out["basis"] = rows;
    out["polynomials"] = polynomials_json(b.polynomials(), x);
    return out;
}

std::string basis_text(const GradedLatticeBasis& b, const std::vector<std::string>& x)
{
    std::ostringstream out;
    out << "degree " << b.degree << " (" << b.basis.rows() << " generators):\n";
    for (const Polynomial& p : b.polynomials())
        out << "  " << to_string(p, x) << "\n";
    return out.str();
}

void cmd_wsr(const Options& o, Report& r)
{
    const Loaded in = load(o);
    r.input_hash = in.hash;
    if (condition_violated(in.pair, r))
        return;
    if (o.degree < 1)
        throw io::SchemaError("--degree", "must be at least 1");
    const std::vector<std::string> u = variable_names("u", in.pair.dimension());
    const std::vector<std::string> x = variable_names("x", in.pair.facet_count());

    Json zs = Json::array();
    for (int v = 0; v < in.pair.vertex_count(); ++v)
    {
        const RatMatrix z = z_vector(in.pair, v);
        Json row = Json::array();
        for (Eigen::Index j = 0; j < z.rows(); ++j)
            row.push_back(to_string(Polynomial::linear(RatVector(z.row(j).transpose())), u));
        zs.push_back(row);
    }
    const GradedLatticeBasis b = graded_basis(in.pair, o.degree);
    r.results["variables"] = in.pair.polytope().facet_labels();
    r.results["z_vectors"] = zs;
    r.results["basis"] = basis_json(b, x);
    r.results["sr_ideal"] = polynomials_json(sr_ideal(in.pair.polytope()), x);
    r.results["linear_ideal"] = polynomials_json(linear_ideal(in.pair), x);
    r.human = "z-vectors:\n" + z_table(in.pair, u) + "\nintegrality lattice, " + basis_text(b, x);
}

void cmd_presentation(const Options& o, Report& r)
{
    const Loaded in = load(o);
    r.input_hash = in.hash;
    if (condition_violated(in.pair, r))
        return;
    if (o.degree < 1)
        throw io::SchemaError("--degree", "must be at least 1");
    std::optional<JVector> j;
    if (!o.j.empty())
        j = parse_j(o.j, in.pair.facet_count());

    const FormalityReport f = formality_check(in.pair, o.budget);
    if (f.status != FormalityStatus::certified)
    {
        r.results["status"] = to_string(f.status);
        r.human = "refused: " + to_string(f.status)
                + "; the presentation needs vanishing odd cohomology, which is not certified\n";
        r.code = f.status == FormalityStatus::budget ? kBudget : kHypothesis;
        return;
    }
    const CohomologyPresentation p = cohomology_presentation(in.pair, o.degree, j, o.budget);
    const std::vector<std::string> x = variable_names("x", p.pair.facet_count());
    Json bases = Json::array();
    std::string text;
    for (const GradedLatticeBasis& b : p.bases)
    {
        bases.push_back(basis_json(b, x));
        text += basis_text(b, x);
    }
    const std::vector<long long> h = h_vector(p.pair.polytope());
    r.results["status"] = to_string(f.status);
    r.results["projective"] = "assumed by the user";
    r.results["variables"] = p.pair.polytope().facet_labels();
    r.results["document"] = io::to_document(p.pair);
    r.results["sr_ideal"] = polynomials_json(p.sr_ideal, x);
    r.results["linear_ideal"] = polynomials_json(p.linear_ideal, x);
    r.results["bases"] = bases;
    r.results["betti_ranks"] = p.betti_ranks;
    r.results["h_vector"] = h;
    for (const auto& [prime, s] : p.formality.searches)
        r.witnesses[prime.str()] = sequence_json(in.pair, s.sequence);

    std::ostringstream out;
    out << "variables: ";
    for (int k = 0; k < p.pair.facet_count(); ++k)
        out << (k ? ", " : "") << x[static_cast<std::size_t>(k)] << " = " << p.pair.polytope().facet_label(k);
    out << "\nStanley-Reisner ideal: " << join_values(polynomials_json(p.sr_ideal, x).get<std::vector<std::string>>())
        << "\nlinear ideal: " << join_values(polynomials_json(p.linear_ideal, x).get<std::vector<std::string>>())
        << "\nranks of H^{2k}: " << join_values(p.betti_ranks) << " (h-vector " << join_values(h) << ")\n"
        << "integrality lattices:\n" << text;
    r.human = out.str();
}

void cmd_census(const Options& o, Report& r)
{
    const Loaded in = load(o);
    r.input_hash = in.hash;
    const CombinatorialPolytope& q = in.pair.polytope();
    const RetractionSequence seq = generic_sequence(q);
    const std::vector<long long> ranks = betti_ranks(q, seq);
    const std::vector<long long> h = h_vector(q);
    r.results["f_vector"] = f_vector(q);
    r.results["h_vector"] = h;
    r.results["dimensions"] = cell_census(q, seq);
    r.results["ranks"] = ranks;
    r.witnesses["sequence"] = sequence_json(in.pair, seq);
    std::ostringstream out;
    out << "f-vector: " << join_values(f_vector(q)) << "\nh-vector: " << join_values(h)
        << "\ncell dimensions: " << join_values(cell_census(q, seq)) << "\nranks: " << join_values(ranks)
        << (ranks == h ? " (equal to the h-vector)" : " (differs from the h-vector)") << "\n";
    r.human = out.str();
}

void emit(const Report& r, const Options& o, std::ostream& out)
{
    if (o.format == "machine")
    {
        Json doc;
        doc["command"] = r.command;
        doc["input_hash"] = r.input_hash;
        doc["results"] = r.results;
        doc["witnesses"] = r.witnesses;
        out << doc.dump(2) << "\n";
    }
    else
    {
        out << r.human;
    }
}

}   // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Combinatorics and integral cohomology data of toric orbifolds"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool document) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "machine"}));
        sub->add_option("--budget", o.budget, "Maximum number of search expansions");
        if (document)
            sub->add_option("document", o.input, "Pair document (JSON)")->required();
        return sub;
    };

    using Handler = void (*)(const Options&, Report&);
    std::vector<std::pair<CLI::App*, Handler>> handlers;

    handlers.emplace_back(common(app.add_subcommand("validate", "Check linear independence at every vertex"), true),
                          cmd_validate);
    handlers.emplace_back(common(app.add_subcommand("orders", "Local group orders at every face and vertex"), true),
                          cmd_orders);
    auto* wedge = common(app.add_subcommand("wedge", "Emit the J-construction of a pair"), true);
    wedge->add_option("--J", o.j, "Comma-separated J-vector")->required();
    handlers.emplace_back(wedge, cmd_wedge);
    auto* formality = common(app.add_subcommand("formality", "Retraction-sequence formality criterion"), true);
    formality->add_option("--prime", o.prime, "Search for a single prime");
    handlers.emplace_back(formality, cmd_formality);
    auto* retraction = common(app.add_subcommand("retraction", "Print a retraction sequence"), true);
    retraction->add_option("--avoid-prime", o.prime, "Require every step order to be prime to p");
    handlers.emplace_back(retraction, cmd_retraction);
    auto* lift = common(app.add_subcommand("lift", "Lift a retraction sequence to a wedge"), true);
    lift->add_option("--facet", o.facet, "Facet label or index")->required();
    lift->add_option("--from", o.from, "Sequence file")->required();
    handlers.emplace_back(lift, cmd_lift);
    auto* wsr = common(app.add_subcommand("wsr", "z-vectors and the integrality lattice in one degree"), true);
    wsr->add_option("--degree", o.degree, "Polynomial degree")->required();
    handlers.emplace_back(wsr, cmd_wsr);
    auto* presentation = common(app.add_subcommand("presentation", "Cohomology ring presentation data"), true);
    presentation->add_option("--degree", o.degree, "Largest polynomial degree")->required();
    presentation->add_option("--J", o.j, "Present the J-construction instead");
    handlers.emplace_back(presentation, cmd_presentation);
    auto* wps = common(app.add_subcommand("wps", "Weighted projective space pair"), false);
    wps->add_option("--chi", o.chi, "Comma-separated weights")->required();
    wps->add_option("--J", o.j, "Apply the J-construction");
    handlers.emplace_back(wps, cmd_wps);
    handlers.emplace_back(common(app.add_subcommand("census", "Cell census and h-vector"), true), cmd_census);

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kSchema;
    }

    for (const auto& [sub, handler] : handlers)
    {
        if (!sub->parsed())
            continue;
        Report r;
        r.command = sub->get_name();
        try
        {
            handler(o, r);
        }
        catch (const io::SchemaError& e)
        {
            err << "error: " << e.what() << "\n";
            return kSchema;
        }
        catch (const DimensionError& e)
        {
            err << "error: " << e.what() << "\n";
            return kSchema;
        }
        catch (const DomainError& e)
        {
            err << "error: " << e.what() << "\n";
            return kSchema;
        }
        catch (const std::exception& e)
        {
            err << "error: " << e.what() << "\n";
            return kFailure;
        }
        emit(r, o, out);
        return r.code;
    }
    return kFailure;
}

}   // namespace toric::cli
