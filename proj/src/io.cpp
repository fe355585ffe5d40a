#include "carleson/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "carleson/error.hpp"

namespace carleson {
namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  fail(Errc::parse, what + " at " + where);
}

const Json& need(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) parse_fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end())
    parse_fail(where, "missing key '" + std::string(key) + "'");
  return *it;
}

long need_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) parse_fail(where, "expected an integer");
  return v.get<long>();
}

std::uint64_t need_uint(const Json& v, const std::string& where) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<long long>() >= 0)
    return static_cast<std::uint64_t>(v.get<long long>());
  parse_fail(where, "expected a nonnegative integer");
}

std::string need_string(const Json& v, const std::string& where) {
  if (!v.is_string()) parse_fail(where, "expected a string");
  return v.get<std::string>();
}

const Json& need_array(const Json& v, const std::string& where) {
  if (!v.is_array()) parse_fail(where, "expected an array");
  return v;
}

Rat need_rat(const Json& v, const std::string& where) {
  return rat_from_string(need_string(v, where));
}

}  // namespace

Json space_to_json(const GroundSpace& space) {
  Json atoms = Json::array();
  for (std::size_t pos = 0; pos < space.size(); ++pos) {
    const Atom& a = space.atom(pos);
    Json entry;
    entry["id"] = a.id;
    entry["weight"] = rat_to_string(a.weight);
    if (!a.label.empty()) entry["label"] = a.label;
    atoms.push_back(std::move(entry));
  }
  Json j;
  j["atoms"] = std::move(atoms);
  return j;
}

SpacePtr space_from_json(const Json& j) {
  const Json& atoms = need_array(need(j, "atoms", "space"), "space.atoms");
  std::vector<Atom> parsed;
  parsed.reserve(atoms.size());
  std::size_t index = 0;
  for (const Json& entry : atoms) {
    const std::string where = "space.atoms[" + std::to_string(index++) + "]";
    Atom a;
    a.id = need_int(need(entry, "id", where), where + ".id");
    a.weight = need_rat(need(entry, "weight", where), where + ".weight");
    if (entry.contains("label"))
      a.label = need_string(entry.at("label"), where + ".label");
    parsed.push_back(std::move(a));
  }
  return GroundSpace::build_atoms(std::move(parsed));
}

Json collection_to_json(const SetCollection& c) {
  Json j;
  j["space"] = space_to_json(*c.space());
  Json sets = Json::array();
  for (const auto& e : c.entries()) {
    Json entry;
    entry["id"] = e.set_id;
    entry["atoms"] = e.set.ids();
    sets.push_back(std::move(entry));
  }
  j["sets"] = std::move(sets);
  return j;
}

Json collection_to_json(const SetCollection& c, Json meta) {
  Json j = collection_to_json(c);
  j["meta"] = std::move(meta);
  return j;
}

SetCollection collection_from_json(const Json& j) {
  SpacePtr space = space_from_json(need(j, "space", "collection"));
  const Json& sets = need_array(need(j, "sets", "collection"), "collection.sets");
  std::vector<std::pair<long, MSet>> entries;
  entries.reserve(sets.size());
  std::size_t index = 0;
  for (const Json& entry : sets) {
    const std::string where = "sets[" + std::to_string(index++) + "]";
    const long id = need_int(need(entry, "id", where), where + ".id");
    const Json& atom_ids = need_array(need(entry, "atoms", where), where + ".atoms");
    std::vector<long> ids;
    ids.reserve(atom_ids.size());
    for (const Json& v : atom_ids) ids.push_back(need_int(v, where + ".atoms"));
    entries.emplace_back(id, MSet::from_ids(space, ids));
  }
  return SetCollection(std::move(space), std::move(entries));
}

namespace {

// Text entry points keep the two-code contract: structural problems are
// ParseError, semantic problems ValidationError (with the specific condition
// folded into the message).
template <typename Fn>
auto guard_parse(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::parse_error& e) {
    fail(Errc::parse, e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::parse) throw;
    fail(Errc::validation, std::string(errc_name(e.code())) + ": " + e.what());
  }
}

}  // namespace

SetCollection parse_collection(const std::string& text) {
  return guard_parse([&] { return collection_from_json(Json::parse(text)); });
}

FamilySpec parse_family_spec(const std::string& text) {
  return guard_parse([&] { return family_spec_from_json(Json::parse(text)); });
}

Json family_spec_to_json(const FamilySpec& spec) {
  Json j;
  switch (spec.kind) {
    case FamilyKind::line:
      j["kind"] = "line";
      j["lambda"] = rat_to_string(spec.lambda);
      j["count"] = spec.count;
      break;
    case FamilyKind::staircase:
      j["kind"] = "staircase";
      j["lambda"] = rat_to_string(spec.lambda);
      j["count"] = spec.count;
      break;
    case FamilyKind::dyadic_intervals:
    case FamilyKind::dyadic_rectangles:
      j["kind"] = spec.kind == FamilyKind::dyadic_intervals
                      ? "dyadic_intervals"
                      : "dyadic_rectangles";
      j["count"] = spec.count;
      j["dimension"] = spec.dimension;
      j["depth"] = spec.depth;
      j["seed"] = spec.seed;
      break;
    case FamilyKind::random_family:
      j["kind"] = "random";
      j["count"] = spec.count;
      j["atoms"] = spec.atom_count;
      j["seed"] = spec.seed;
      break;
  }
  return j;
}

FamilySpec family_spec_from_json(const Json& j) {
  FamilySpec spec;
  const std::string kind = need_string(need(j, "kind", "family"), "family.kind");
  if (kind == "line")
    spec.kind = FamilyKind::line;
  else if (kind == "staircase")
    spec.kind = FamilyKind::staircase;
  else if (kind == "dyadic_intervals")
    spec.kind = FamilyKind::dyadic_intervals;
  else if (kind == "dyadic_rectangles")
    spec.kind = FamilyKind::dyadic_rectangles;
  else if (kind == "random")
    spec.kind = FamilyKind::random_family;
  else
    fail(Errc::validation, "unknown family kind '" + kind + "'");

  if (j.contains("lambda"))
    spec.lambda = need_rat(j.at("lambda"), "family.lambda");
  if (j.contains("count"))
    spec.count = need_int(j.at("count"), "family.count");
  if (j.contains("dimension"))
    spec.dimension = static_cast<int>(need_int(j.at("dimension"), "family.dimension"));
  else
    spec.dimension = spec.kind == FamilyKind::dyadic_rectangles ? 2 : 1;
  if (j.contains("depth"))
    spec.depth = static_cast<int>(need_int(j.at("depth"), "family.depth"));
  if (j.contains("atoms"))
    spec.atom_count = static_cast<int>(need_int(j.at("atoms"), "family.atoms"));
  if (j.contains("seed")) spec.seed = need_uint(j.at("seed"), "family.seed");
  return spec;
}

Json log_trace_to_json(const LogTrace& t, const GroundSpace& space) {
  Json j;
  j["A"] = rat_to_string(t.A);
  Json steps = Json::array();
  for (const LogStep& step : t.steps) {
    Json s;
    s["set"] = step.set_id;
    s["lambda"] = rat_to_string(step.lambda);
    Json f = Json::array();
    for (const auto& [pos, value] : step.f.entries()) {
      Json point;
      point["atom"] = space.atom(pos).id;
      point["value"] = rat_to_string(value);
      f.push_back(std::move(point));
    }
    s["f"] = std::move(f);
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  return j;
}

Json opt_trace_to_json(const OptTrace& t, const ThresholdMode& mode) {
  Json j;
  j["mode"] = mode.kind == ThresholdMode::Kind::fixed ? "fixed" : "adaptive";
  j["eta"] = rat_to_string(mode.eta);
  if (mode.kind == ThresholdMode::Kind::fixed) j["M"] = rat_to_string(mode.M);
  j["A"] = rat_to_string(t.A);
  Json steps = Json::array();
  for (const OptStep& step : t.steps) {
    Json s;
    s["set"] = step.set_id;
    s["lambda"] = rat_to_string(step.lambda_weak);
    s["threshold"] = rat_to_string(step.threshold);
    s["E"] = step.e_set.ids();
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  return j;
}

Json witness_to_json(const SparseWitness& w, const GroundSpace& space) {
  Json j;
  j["eta"] = rat_to_string(w.achieved_eta);
  Json phi = Json::array();
  for (const auto& [id, f] : w.phi) {
    Json entry;
    entry["set"] = id;
    Json values = Json::array();
    for (const auto& [pos, value] : f.entries()) {
      Json point;
      point["atom"] = space.atom(pos).id;
      point["value"] = rat_to_string(value);
      values.push_back(std::move(point));
    }
    entry["values"] = std::move(values);
    phi.push_back(std::move(entry));
  }
  j["phi"] = std::move(phi);
  return j;
}

SparseWitness witness_from_json(const Json& j, const SetCollection& c) {
  SparseWitness w;
  w.achieved_eta = need_rat(need(j, "eta", "witness"), "witness.eta");
  const Json& phi = need_array(need(j, "phi", "witness"), "witness.phi");
  std::size_t index = 0;
  for (const Json& entry : phi) {
    const std::string where = "phi[" + std::to_string(index++) + "]";
    const long id = need_int(need(entry, "set", where), where + ".set");
    const Json& values =
        need_array(need(entry, "values", where), where + ".values");
    std::vector<std::pair<std::size_t, Rat>> pairs;
    pairs.reserve(values.size());
    for (const Json& point : values) {
      const long atom_id = need_int(need(point, "atom", where), where + ".atom");
      pairs.emplace_back(c.space()->position_of_checked(atom_id),
                         need_rat(need(point, "value", where), where + ".value"));
    }
    w.phi.emplace_back(id, AtomFunction::from_entries(std::move(pairs)));
  }
  return w;
}

Json partition_to_json(const PartitionResult& p) {
  Json j;
  j["gamma"] = rat_to_string(p.gamma);
  Json buckets = Json::array();
  for (const auto& bucket : p.buckets) buckets.push_back(bucket);
  j["buckets"] = std::move(buckets);
  Json mass = Json::object();
  std::map<long, const MSet*> by_id;
  for (const auto& [id, piece] : p.new_mass) by_id.emplace(id, &piece);
  for (const auto& [id, piece] : by_id) mass[std::to_string(id)] = piece->ids();
  j["new_mass"] = std::move(mass);
  return j;
}

PartitionResult partition_from_json(const Json& j, const SetCollection& c) {
  PartitionResult p;
  p.gamma = need_rat(need(j, "gamma", "partition"), "partition.gamma");
  const Json& buckets =
      need_array(need(j, "buckets", "partition"), "partition.buckets");
  for (const Json& bucket : buckets) {
    std::vector<long> ids;
    for (const Json& v : need_array(bucket, "partition.buckets[]"))
      ids.push_back(need_int(v, "partition.buckets[]"));
    p.buckets.push_back(std::move(ids));
  }
  const Json& mass = need(j, "new_mass", "partition");
  if (!mass.is_object()) parse_fail("partition.new_mass", "expected an object");
  for (const auto& [key, value] : mass.items()) {
    long id = 0;
    try {
      id = std::stol(key);
    } catch (const std::exception&) {
      parse_fail("partition.new_mass", "non-integer key '" + key + "'");
    }
    // Built position-by-position: an empty new-mass set must stay
    // representable so verification can report it, not crash on it.
    MSet piece = MSet::empty_set(c.space());
    for (const Json& v : need_array(value, "partition.new_mass." + key))
      piece.add_pos(c.space()->position_of_checked(
          need_int(v, "partition.new_mass." + key)));
    p.new_mass.emplace_back(id, std::move(piece));
  }
  // The original interleaving is not serialized; bucket-major order stands in.
  for (const auto& bucket : p.buckets)
    p.insertion_order.insert(p.insertion_order.end(), bucket.begin(), bucket.end());
  return p;
}

Json oracle_report_to_json(const OracleReport& report) {
  Json j;
  j["value"] = rat_to_string(report.value);
  j["argmax"] = report.argmax;
  j["count"] = report.enumerated_count;
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char b : bytes) {
    hash ^= b;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string content_hash(std::string_view bytes) {
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return std::string("fnv1a64:") + buffer;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) fail(Errc::io, "read failed on '" + path + "'");
  return buffer.str();
}

void write_file_atomic(const std::string& path, std::string_view content) {
  const std::string temp = path + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::io, "cannot open '" + temp + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) fail(Errc::io, "write failed on '" + temp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) fail(Errc::io, "rename to '" + path + "' failed: " + ec.message());
}

}  // namespace carleson
