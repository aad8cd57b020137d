#include <doctest.h>

#include "linkobs/report.hpp"

using namespace linkobs;

TEST_CASE("records carry the full field layout") {
  Json rec = record_lemma21(verify_lemma_2_1(1));
  for (const char* field :
       {"claim", "n", "seed", "parameters", "pass", "evidence", "witnesses", "timestamp"})
    CHECK(rec.contains(field));
  CHECK(rec["claim"] == "lemma21");
  CHECK(rec["evidence"]["top_cells"] == 18);
  CHECK(rec["evidence"]["coboundary_rank"] == 17);
  CHECK(validate_record(rec).empty());
}

TEST_CASE("schema accepts saved records and rejects mutilated ones") {
  Json rec = record_thm12(verify_theorem_1_2(1, 3));
  CHECK(validate_record(rec).empty());

  Json truncated = rec;
  truncated.erase("evidence");
  CHECK_FALSE(validate_record(truncated).empty());

  Json wrong_type = rec;
  wrong_type["pass"] = "yes";
  CHECK_FALSE(validate_record(wrong_type).empty());

  Json bad_claim = rec;
  bad_claim["claim"] = "thm99";
  CHECK_FALSE(validate_record(bad_claim).empty());
}

TEST_CASE("schema document lists every record field") {
  Json schema = report_schema();
  for (const char* field :
       {"claim", "n", "seed", "parameters", "pass", "evidence", "witnesses", "timestamp"})
    CHECK(schema["fields"].contains(field));
}

TEST_CASE("records replay byte-identically modulo the timestamp") {
  Json a = record_thm22(verify_theorem_2_2(1, 5, 42));
  Json b = record_thm22(verify_theorem_2_2(1, 5, 42));
  CHECK(dump_record(strip_timestamp(a)) == dump_record(strip_timestamp(b)));

  Json c = record_thm22(verify_theorem_2_2(1, 5, 43));
  CHECK(dump_record(strip_timestamp(a)) != dump_record(strip_timestamp(c)));
}
