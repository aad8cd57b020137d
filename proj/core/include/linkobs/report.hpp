// Verification records: every verify run emits one JSON document with a
// fixed key layout, replayable bit-exactly from its seed (the timestamp is
// the only non-deterministic field).
#pragma once

#include <string>

#include <json.hpp>

#include "linkobs/links.hpp"
#include "linkobs/obstruction.hpp"

namespace linkobs {

using Json = nlohmann::ordered_json;

Json record_lemma21(const Lemma21Report& rep);
Json record_thm22(const Thm22Report& rep);
Json record_thm12(const Thm12Report& rep);
Json record_prop13(const Prop13Report& rep);
Json record_suspension(const SuspensionReport& rep);
Json record_remark14(const Remark14Report& rep);

// Serialized with two-space indentation and a trailing newline; keys keep
// their insertion order, so equal records serialize to equal bytes.
std::string dump_record(const Json& record);

// Copy without the timestamp, for byte-comparing replays.
Json strip_timestamp(const Json& record);

// Machine-readable description of the record layout.
Json report_schema();

// Structural validation of a record against report_schema(); returns the
// list of violations, empty when the record conforms.
std::vector<std::string> validate_record(const Json& record);

}  // namespace linkobs
