#pragma once

#include "podium/core.hpp"
#include "podium/optimal.hpp"
#include "podium/witness.hpp"

#include <json.hpp>

#include <charconv>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace podium {

using json = nlohmann::json;

/// One CSV row, comma-separated; double quotes protect embedded commas and
/// double up to escape themselves.
inline std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

namespace detail {

inline std::string chomp(std::string line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    return line;
}

inline int parse_position(const std::string& field, size_t row) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size() || value < 1)
        throw std::invalid_argument("bad position '" + field + "' in row " + std::to_string(row));
    return value;
}

inline double parse_number(const std::string& field, size_t row) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw std::invalid_argument("bad performance '" + field + "' in row " +
                                    std::to_string(row));
    return value;
}

/// Shared CSV walk: verifies the header, groups rows by race in order of
/// first appearance, and enforces contiguous positions 1..k per race.
template <typename Value, typename ParseField>
std::vector<std::pair<std::string, std::vector<Value>>> read_race_csv(
    std::istream& in, const std::string& expected_header, ParseField parse_field) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty file");
    if (chomp(line) != expected_header)
        throw std::invalid_argument("expected header '" + expected_header + "', got '" +
                                    chomp(line) + "'");

    std::vector<std::pair<std::string, std::map<int, Value>>> grouped;
    std::map<std::string, size_t> index;
    size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        line = chomp(line);
        if (line.empty()) continue;
        auto fields = split_csv_row(line);
        if (fields.size() != 3)
            throw std::invalid_argument("expected 3 fields in row " + std::to_string(row) +
                                        ", got " + std::to_string(fields.size()));
        const std::string& race_id = fields[0];
        int pos = parse_position(fields[1], row);
        auto [it, fresh] = index.try_emplace(race_id, grouped.size());
        if (fresh) grouped.push_back({race_id, {}});
        auto& positions = grouped[it->second].second;
        if (!positions.emplace(pos, parse_field(fields[2], row)).second)
            throw std::invalid_argument("duplicate position " + std::to_string(pos) +
                                        " in race '" + race_id + "'");
    }
    if (grouped.empty()) throw std::invalid_argument("no race rows in file");

    std::vector<std::pair<std::string, std::vector<Value>>> out;
    for (auto& [race_id, positions] : grouped) {
        int expect = 1;
        std::vector<Value> ordered;
        for (auto& [pos, value] : positions) {
            if (pos != expect)
                throw std::invalid_argument("race '" + race_id +
                                            "' has a gap in positions (missing " +
                                            std::to_string(expect) + ")");
            ++expect;
            ordered.push_back(std::move(value));
        }
        out.push_back({race_id, std::move(ordered)});
    }
    return out;
}

}  // namespace detail

/// Reads `race_id,position,athlete` rows into a Profile. Every race must
/// rank the same field; with intersect=true the ranking is restricted to the
/// athletes common to all races instead (relative order kept).
inline Profile ingest_races(std::istream& in, bool intersect = false) {
    auto rows = detail::read_race_csv<std::string>(
        in, "race_id,position,athlete",
        [](const std::string& field, size_t row) {
            if (field.empty())
                throw std::invalid_argument("empty athlete name in row " + std::to_string(row));
            return field;
        });

    std::vector<std::pair<std::string, std::set<std::string>>> fields;
    for (auto& [race_id, names] : rows) {
        std::set<std::string> seen;
        for (const auto& name : names)
            if (!seen.insert(name).second)
                throw std::invalid_argument("athlete '" + name + "' appears twice in race '" +
                                            race_id + "'");
        fields.push_back({race_id, std::move(seen)});
    }

    std::set<std::string> roster = fields.front().second;
    if (intersect) {
        for (const auto& [race_id, field] : fields) {
            std::set<std::string> common;
            for (const auto& name : roster)
                if (field.count(name)) common.insert(name);
            roster = std::move(common);
        }
        if (roster.size() < 2)
            throw std::invalid_argument("fewer than 2 athletes are common to all races");
    } else {
        for (size_t i = 0; i < fields.size(); ++i) {
            if (fields[i].second == roster) continue;
            for (const auto& name : roster)
                if (!fields[i].second.count(name))
                    throw std::invalid_argument("athlete '" + name + "' is missing from race '" +
                                                fields[i].first +
                                                "'; use --intersect to rank the common field");
            for (const auto& name : fields[i].second)
                if (!roster.count(name))
                    throw std::invalid_argument("athlete '" + name + "' is missing from race '" +
                                                rows.front().first +
                                                "'; use --intersect to rank the common field");
        }
    }

    std::vector<RaceRanking> races;
    for (auto& [race_id, names] : rows) {
        RaceRanking race;
        for (auto& name : names)
            if (roster.count(name)) race.order.push_back({name});
        races.push_back(std::move(race));
    }
    std::vector<Athlete> athletes;
    for (const auto& name : roster) athletes.push_back({name});
    return Profile(std::move(athletes), std::move(races));
}

/// Reads `race_id,position,performance` rows. With top_k the vectors are cut
/// to the first k positions; races shorter than k are an error, as are
/// ragged lengths when no cutoff is given.
inline PerformanceTable ingest_performance(std::istream& in,
                                           std::optional<int> top_k = std::nullopt) {
    auto rows = detail::read_race_csv<double>(in, "race_id,position,performance",
                                              detail::parse_number);
    const size_t lead = rows.front().second.size();
    std::vector<std::vector<double>> races;
    for (auto& [race_id, values] : rows) {
        if (top_k && static_cast<int>(values.size()) < *top_k)
            throw std::invalid_argument("race '" + race_id + "' has only " +
                                        std::to_string(values.size()) +
                                        " positions, fewer than the requested top " +
                                        std::to_string(*top_k));
        if (!top_k && values.size() != lead)
            throw std::invalid_argument("ragged races: '" + race_id + "' has " +
                                        std::to_string(values.size()) + " positions, '" +
                                        rows.front().first + "' has " + std::to_string(lead));
        races.push_back(std::move(values));
    }
    return PerformanceTable(std::move(races), top_k);
}

/// Reads `position,score` rows (positions 1..k contiguous) into an exact
/// score vector; scores may be integers, decimals or fractions like "3/2".
inline std::vector<Rat> ingest_scores(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty file");
    if (detail::chomp(line) != "position,score")
        throw std::invalid_argument("expected header 'position,score', got '" +
                                    detail::chomp(line) + "'");
    std::map<int, Rat> by_position;
    size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        line = detail::chomp(line);
        if (line.empty()) continue;
        auto fields = split_csv_row(line);
        if (fields.size() != 2)
            throw std::invalid_argument("expected 2 fields in row " + std::to_string(row) +
                                        ", got " + std::to_string(fields.size()));
        int pos = detail::parse_position(fields[0], row);
        if (!by_position.emplace(pos, rat_from_string(fields[1])).second)
            throw std::invalid_argument("duplicate position " + std::to_string(pos));
    }
    if (by_position.empty()) throw std::invalid_argument("no score rows in file");
    std::vector<Rat> scores;
    int expect = 1;
    for (auto& [pos, score] : by_position) {
        if (pos != expect)
            throw std::invalid_argument("gap in positions (missing " + std::to_string(expect) +
                                        ")");
        ++expect;
        scores.push_back(std::move(score));
    }
    return scores;
}

inline json profile_to_json(const Profile& p) {
    json races = json::array();
    for (const auto& race : p.races()) {
        json order = json::array();
        for (const auto& a : race.order) order.push_back(a.id);
        races.push_back(std::move(order));
    }
    json athletes = json::array();
    for (const auto& a : p.roster()) athletes.push_back(a.id);
    return json{{"athletes", std::move(athletes)}, {"races", std::move(races)}};
}

inline Profile profile_from_json(const json& j) {
    std::vector<Athlete> roster;
    for (const auto& id : j.at("athletes")) roster.push_back({id.get<std::string>()});
    std::vector<RaceRanking> races;
    for (const auto& row : j.at("races")) {
        RaceRanking race;
        for (const auto& id : row) race.order.push_back({id.get<std::string>()});
        races.push_back(std::move(race));
    }
    return Profile(std::move(roster), std::move(races));
}

namespace detail {

inline json score_to_json(const Rat& v) { return rat_to_string(v); }
inline json score_to_json(double v) { return v; }

}  // namespace detail

/// Groups plus per-round totals; exact totals serialize as "p/q" strings,
/// float totals as numbers.
template <typename R>
json ranking_to_json(const TotalRanking<R>& ranking) {
    json groups = json::array();
    for (const auto& group : ranking.groups) {
        json g = json::array();
        for (const auto& a : group) g.push_back(a.id);
        groups.push_back(std::move(g));
    }
    json totals = json::object();
    for (const auto& [athlete, rounds] : ranking.totals) {
        json r = json::array();
        for (const auto& v : rounds) r.push_back(detail::score_to_json(v));
        totals[athlete.id] = std::move(r);
    }
    return json{{"groups", std::move(groups)}, {"totals", std::move(totals)}};
}

inline json witness_to_json(const Witness& w) {
    json out{{"claim", w.claim},
             {"profile", profile_to_json(w.profile)},
             {"verification", ranking_to_json(w.verification)}};
    if (w.reduced_profile) out["reduced_profile"] = profile_to_json(*w.reduced_profile);
    if (w.reduced_verification)
        out["reduced_verification"] = ranking_to_json(*w.reduced_verification);
    return out;
}

}  // namespace podium
