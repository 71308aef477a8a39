#include "kgap/io.hpp"

#include <sstream>

namespace kgap::io {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long long>());
    }
    throw Error("expected a rational string \"p/q\", got " + j.dump());
}

Json rationals_to_json(const std::vector<Rational>& values)
{
    Json out = Json::array();
    for (const auto& v : values) {
        out.push_back(v.str());
    }
    return out;
}

const Json& field(const Json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name)) {
        throw Error(std::string("missing field '") + name + "'");
    }
    return j.at(name);
}

}  // namespace

RatVec parse_rational_list(std::string_view text)
{
    std::vector<Rational> out;
    for (auto part : split(text, ',')) {
        out.push_back(Rational::parse(trim(part)));
    }
    return RatVec(std::move(out));
}

Lattice parse_lattice(std::string_view text, std::size_t dim)
{
    text = trim(text);
    if (text.empty() || text == "I" || text == "i") {
        return Lattice::standard(dim);
    }
    std::vector<RatVec> rows;
    for (auto part : split(text, ';')) {
        rows.push_back(parse_rational_list(part));
    }
    if (rows.size() != dim) {
        throw Error("lattice has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(dim));
    }
    for (const auto& r : rows) {
        if (r.dim() != dim) {
            throw Error("lattice row has " + std::to_string(r.dim()) + " entries, expected " + std::to_string(dim));
        }
    }
    return Lattice(RatMat::from_rows(rows));
}

Json to_json(const RatVec& v)
{
    Json out = Json::array();
    for (const auto& x : v) {
        out.push_back(x.str());
    }
    return out;
}

RatVec rat_vec_from_json(const Json& j)
{
    if (!j.is_array()) {
        throw Error("expected an array of rationals");
    }
    std::vector<Rational> out;
    for (const auto& e : j) {
        out.push_back(rational_from_json(e));
    }
    return RatVec(std::move(out));
}

Json basis_to_json(const Lattice& lattice)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < lattice.dim(); ++r) {
        rows.push_back(to_json(lattice.basis().row(r)));
    }
    return rows;
}

Lattice lattice_from_json(const Json& j)
{
    if (!j.is_array()) {
        throw Error("lattice_basis must be an array of rows");
    }
    std::vector<RatVec> rows;
    for (const auto& r : j) {
        rows.push_back(rat_vec_from_json(r));
    }
    return Lattice(RatMat::from_rows(rows));
}

Json instance_to_json(const KroneckerInstance& inst)
{
    Json j;
    j["d"] = inst.dim();
    j["alpha"] = to_json(inst.alpha);
    j["lattice_basis"] = basis_to_json(inst.lattice);
    j["N"] = inst.N;
    return j;
}

KroneckerInstance instance_from_json(const Json& j)
{
    RatVec alpha = rat_vec_from_json(field(j, "alpha"));
    const auto d = field(j, "d").get<std::size_t>();
    if (d != alpha.dim()) {
        throw Error("field 'd' disagrees with alpha");
    }
    Lattice lattice = j.contains("lattice_basis") ? lattice_from_json(j.at("lattice_basis")) : Lattice::standard(d);
    return KroneckerInstance(std::move(alpha), std::move(lattice), field(j, "N").get<std::int64_t>());
}

Json to_json(const GapSpectrum& s)
{
    Json j = instance_to_json(s.instance);
    j["metric"] = std::string(to_string(s.metric));
    j["deltas"] = rationals_to_json(s.deltas);
    j["distinct"] = rationals_to_json(s.distinct);
    j["g"] = s.g();
    return j;
}

GapSpectrum spectrum_from_json(const Json& j)
{
    GapSpectrum s{instance_from_json(j), parse_metric(field(j, "metric").get<std::string>()), {}, {}};
    for (const auto& e : field(j, "deltas")) {
        s.deltas.push_back(rational_from_json(e));
    }
    for (const auto& e : field(j, "distinct")) {
        s.distinct.push_back(rational_from_json(e));
    }
    if (s.deltas.size() != static_cast<std::size_t>(s.instance.N)) {
        throw Error("deltas has " + std::to_string(s.deltas.size()) + " entries, expected N");
    }
    if (j.contains("g") && j.at("g").get<std::size_t>() != s.g()) {
        throw Error("field 'g' disagrees with distinct");
    }
    return s;
}

std::string to_csv(const GapSpectrum& s)
{
    std::ostringstream os;
    os << "n,delta\n";
    for (std::size_t i = 0; i < s.deltas.size(); ++i) {
        os << (i + 1) << ',' << s.deltas[i].str() << '\n';
    }
    return os.str();
}

Json to_json(const CandidateSet& c)
{
    Json j;
    j["K"] = c.K();
    Json points = Json::array();
    for (const auto& p : c.points) {
        Json e;
        e["k"] = p.k;
        e["v"] = to_json(p.v);
        e["ell"] = to_json(p.ell);
        e["vnorm"] = p.vnorm.str();
        e["signature"] = to_string(orthant_signature(p));
        points.push_back(std::move(e));
    }
    j["points"] = std::move(points);
    return j;
}

GenericLattice generic_lattice_from_json(const Json& j)
{
    GenericLattice m;
    const Json* rows = &j;
    if (j.is_object()) {
        rows = &field(j, "matrix");
        if (j.contains("tolerance")) {
            m.tolerance = j.at("tolerance").get<double>();
        }
    }
    if (!rows->is_array()) {
        throw Error("generic lattice must be an array of rows");
    }
    for (const auto& r : *rows) {
        m.basis.push_back(r.get<std::vector<double>>());
    }
    return m;
}

}  // namespace kgap::io
