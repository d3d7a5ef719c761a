#pragma once

#include <string>

#include "coremed/coreset.hpp"

namespace coremed {

// Shortest round-trip decimal form (std::to_chars), used by every writer so
// identical values always serialize to identical bytes.
std::string format_double(double v);

// Points CSV: header row, one numeric column per coordinate; a column named
// "weight" (any position) carries row weights. Rankings CSV: headerless rows,
// each a permutation of 0..d-1 in rank-vector form. Sets file: one line per
// set of space-separated element indices; blank line = empty set.
PointSet read_points_csv(const std::string& path);
void write_points_csv(const std::string& path, const PointSet& ps);
RankingSet read_rankings_csv(const std::string& path);
void write_rankings_csv(const std::string& path, const RankingSet& rs);
SetFamily read_sets_file(const std::string& path);
void write_sets_file(const std::string& path, const SetFamily& sf);

// FNV-1a over a canonical byte image (dims, raw values, weights). Ties a
// coreset to the exact parent it indexes.
std::uint64_t content_hash(const PointSet& ps);
std::uint64_t content_hash(const RankingSet& rs);
std::uint64_t content_hash(const SetFamily& sf);

Coreset read_coreset_json(const std::string& path);
void write_coreset_json(const std::string& path, const Coreset& cs);

std::string check_report_to_json(const CheckReport& r);
CheckReport check_report_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace coremed
