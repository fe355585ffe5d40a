#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"

#include "carleson/collection.hpp"
#include "carleson/generators.hpp"
#include "carleson/greedy_log.hpp"
#include "carleson/greedy_opt.hpp"
#include "carleson/oracle.hpp"
#include "carleson/partition.hpp"
#include "carleson/witness.hpp"

namespace carleson {

// ordered_json keeps member order as written, so serialized reports are
// byte-deterministic.
using Json = nlohmann::ordered_json;

// Ground space: {"atoms":[{"id":int,"weight":"p/q","label":str?}]}.
Json space_to_json(const GroundSpace& space);
SpacePtr space_from_json(const Json& j);

// Collection: {"space":<ground-space>,"sets":[{"id":int,"atoms":[int,...]}]}.
// An optional "meta" object is carried through untouched and ignored by the
// parser; generators use it to record provenance (kind, parameters, PRNG).
Json collection_to_json(const SetCollection& c);
Json collection_to_json(const SetCollection& c, Json meta);
SetCollection collection_from_json(const Json& j);

// Text entry points wrap structural problems as ParseError (with location)
// and semantic problems as ValidationError (with the offending entity).
SetCollection parse_collection(const std::string& text);
FamilySpec parse_family_spec(const std::string& text);

Json family_spec_to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const Json& j);

// {"A":"p/q","steps":[{"set":id,"lambda":"p/q","f":[{"atom":id,"value":"p/q"}]}]}
Json log_trace_to_json(const LogTrace& t, const GroundSpace& space);

// {"mode":...,"eta":"p/q","M":"p/q"?,"A":"p/q",
//  "steps":[{"set":id,"lambda":"p/q","threshold":"p/q","E":[atom ids]}]}
Json opt_trace_to_json(const OptTrace& t, const ThresholdMode& mode);

// {"eta":"p/q","phi":[{"set":id,"values":[{"atom":id,"value":"p/q"}]}]}
Json witness_to_json(const SparseWitness& w, const GroundSpace& space);
SparseWitness witness_from_json(const Json& j, const SetCollection& c);

// {"gamma":"p/q","buckets":[[set_id,...],...],
//  "new_mass":{"<set_id>":[atom_id,...]}} — keys in ascending id order.
Json partition_to_json(const PartitionResult& p);
PartitionResult partition_from_json(const Json& j, const SetCollection& c);

// {"value":"p/q","argmax":[ids],"count":n}
Json oracle_report_to_json(const OracleReport& report);

// Canonical rendering: two-space indent plus trailing newline.
std::string dump_json(const Json& j);

std::uint64_t fnv1a64(std::string_view bytes);
// "fnv1a64:<16 hex digits>"
std::string content_hash(std::string_view bytes);

std::string read_file(const std::string& path);
// Writes to a sibling temp file, then renames over the target.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace carleson
