#pragma once

#include "podium/core.hpp"
#include "podium/optimal.hpp"
#include "podium/rational.hpp"
#include "podium/rules.hpp"

#include <string>
#include <vector>

namespace podium::fixtures {

namespace detail {

inline RaceRanking race_from_row(const char* row) {
    RaceRanking race;
    std::string cur;
    for (const char* c = row; *c; ++c) {
        if (*c == ',') {
            race.order.push_back({cur});
            cur.clear();
        } else {
            cur.push_back(*c);
        }
    }
    race.order.push_back({cur});
    return race;
}

inline Profile profile_from_rows(const char* const* rows, int n) {
    std::vector<RaceRanking> races;
    races.reserve(n);
    for (int i = 0; i < n; ++i) races.push_back(race_from_row(rows[i]));
    return Profile::from_races(std::move(races));
}

}  // namespace detail

/// World Cup points for positions 1..41 (41st scores nothing).
inline std::vector<Rat> biathlon_scores() {
    std::vector<Rat> s{60, 54, 48, 43, 40, 38, 36, 34, 32, 31};
    for (int v = 30; v >= 0; --v) s.push_back(v);
    return s;
}

/// Per-race prize money in euros, paid down to position 20.
inline std::vector<Rat> biathlon_prize() {
    std::vector<Rat> s{15000, 12000, 9000, 7000, 6000, 5000, 4000, 3500, 3000, 2500,
                       2000,  1750,  1500, 1250, 1000, 900,  800,  700,  600,  500};
    s.resize(41, Rat(0));
    return s;
}

/// Grand-prix motorcycle points for a 17-rider field (top 15 score).
inline std::vector<Rat> motogp_scores() {
    return {25, 20, 16, 13, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0, 0};
}

/// Diamond League placing points: plain Borda for an 8-athlete final plus a
/// ninth zero row.
inline std::vector<double> diamond_league_borda() {
    return {8, 7, 6, 5, 4, 3, 2, 1, 0};
}

/// Biathlon world cup rule: championship points, ties broken by race wins.
inline ScoreTable biathlon_table() {
    return ScoreTable::custom(biathlon_scores(), TrimPolicy::FromBottom)
        .with_plurality_tiebreak();
}

inline ScoreTable motogp_table() {
    return ScoreTable::custom(motogp_scores(), TrimPolicy::FromBottom);
}

/// Borda with the last gap widened: (m, m-1, …, 2, 0), smaller fields keep
/// the tail. Strictly decreasing, so unanimous winners are harmless; the
/// widened bottom gap breaks loser independence.
inline ScoreTable stretched_borda_table(int m) {
    if (m < 2) throw std::invalid_argument("table needs at least 2 positions");
    std::vector<Rat> s;
    for (int v = m; v >= 2; --v) s.push_back(v);
    s.push_back(0);
    return ScoreTable::custom(std::move(s), TrimPolicy::FromTop);
}

/// Growing penalties (0, -1, -3, -6, …, -j(j-1)/2), smaller fields keep the
/// head. The mirror image of the stretched Borda table: unanimous losers are
/// harmless, unanimous winners are not.
inline ScoreTable triangular_penalty_table(int m) {
    if (m < 2) throw std::invalid_argument("table needs at least 2 positions");
    std::vector<Rat> s;
    for (int j = 1; j <= m; ++j) s.push_back(Rat(-j * (j - 1)) / 2);
    return ScoreTable::custom(std::move(s), TrimPolicy::FromBottom);
}

/// Season-long golf placing points, positions 1..70. Reconstructed from the
/// published prize structure by interpolating its arithmetic runs; treat as
/// illustrative, not official.
inline std::vector<double> pga_scores_reconstructed() {
    std::vector<double> s{500, 300, 190, 135, 110, 100, 90};
    for (int v = 850; v >= 600; v -= 50) s.push_back(v / 10.0);   // 85..60
    s.push_back(57);
    for (int v = 550; v >= 370; v -= 20) s.push_back(v / 10.0);   // 55..37
    for (int v = 355; v >= 220; v -= 15) s.push_back(v / 10.0);   // 35.5..22
    for (int v = 210; v >= 110; v -= 10) s.push_back(v / 10.0);   // 21..11
    for (int v = 105; v >= 60; v -= 5) s.push_back(v / 10.0);     // 10.5..6
    for (int v = 58; v >= 30; v -= 2) s.push_back(v / 10.0);      // 5.8..3
    return s;
}

/// Tournament prize shares (percent of the purse), positions 1..70; same
/// reconstructed caveat as the score vector.
inline std::vector<double> pga_prize_reconstructed() {
    std::vector<double> s{18, 10.9, 6.9, 4.9, 4.1, 3.625, 3.375, 3.125};
    for (int v = 2925; v >= 1925; v -= 100) s.push_back(v / 1000.0);
    for (int v = 1825; v >= 1125; v -= 100) s.push_back(v / 1000.0);
    for (int v = 1045; v >= 805; v -= 80) s.push_back(v / 1000.0);
    for (int v = 775; v >= 595; v -= 30) s.push_back(v / 1000.0);
    for (int v = 570; v >= 495; v -= 25) s.push_back(v / 1000.0);
    for (int v = 475; v >= 295; v -= 20) s.push_back(v / 1000.0);
    for (int v : {279, 265, 257, 251, 245, 241, 237, 235}) s.push_back(v / 1000.0);
    for (int v = 232; v >= 205; v -= 3) s.push_back(v / 1000.0);
    return s;
}

/// Season standings where the points leader loses her crown when a rival
/// retires: 7 races, 31 athletes. The three protagonists sit at their
/// documented finishing positions; the rest of the field rotates so nobody
/// else comes close.
inline Profile biathlon_season_profile() {
    static const char* const rows[] = {
        "Mäkäräinen,Rest01,Rest02,Domracheva,Rest03,Rest04,Rest05,Rest06,Glazyrina,Rest07,Rest08,Rest09,Rest10,Rest11,Rest12,Rest13,Rest14,Rest15,Rest16,Rest17,Rest18,Rest19,Rest20,Rest21,Rest22,Rest23,Rest24,Rest25,Rest26,Rest27,Rest28",
        "Mäkäräinen,Glazyrina,Rest28,Rest01,Rest02,Rest03,Rest04,Rest05,Rest06,Rest07,Rest08,Rest09,Domracheva,Rest10,Rest11,Rest12,Rest13,Rest14,Rest15,Rest16,Rest17,Rest18,Rest19,Rest20,Rest21,Rest22,Rest23,Rest24,Rest25,Rest26,Rest27",
        "Domracheva,Mäkäräinen,Rest27,Rest28,Rest01,Rest02,Rest03,Rest04,Rest05,Rest06,Rest07,Rest08,Rest09,Rest10,Rest11,Rest12,Rest13,Rest14,Rest15,Rest16,Rest17,Rest18,Rest19,Rest20,Rest21,Rest22,Rest23,Rest24,Rest25,Rest26,Glazyrina",
        "Domracheva,Rest26,Mäkäräinen,Rest27,Rest28,Rest01,Rest02,Rest03,Rest04,Rest05,Rest06,Rest07,Rest08,Rest09,Glazyrina,Rest10,Rest11,Rest12,Rest13,Rest14,Rest15,Rest16,Rest17,Rest18,Rest19,Rest20,Rest21,Rest22,Rest23,Rest24,Rest25",
        "Domracheva,Mäkäräinen,Rest25,Rest26,Rest27,Glazyrina,Rest28,Rest01,Rest02,Rest03,Rest04,Rest05,Rest06,Rest07,Rest08,Rest09,Rest10,Rest11,Rest12,Rest13,Rest14,Rest15,Rest16,Rest17,Rest18,Rest19,Rest20,Rest21,Rest22,Rest23,Rest24",
        "Rest24,Rest25,Rest26,Rest27,Rest28,Rest01,Domracheva,Rest02,Rest03,Rest04,Rest05,Mäkäräinen,Rest06,Rest07,Rest08,Rest09,Rest10,Rest11,Rest12,Rest13,Glazyrina,Rest14,Rest15,Rest16,Rest17,Rest18,Rest19,Rest20,Rest21,Rest22,Rest23",
        "Domracheva,Rest23,Rest24,Mäkäräinen,Rest25,Rest26,Rest27,Rest28,Rest01,Rest02,Rest03,Rest04,Rest05,Rest06,Rest07,Rest08,Rest09,Rest10,Rest11,Rest12,Rest13,Rest14,Rest15,Rest16,Rest17,Rest18,Rest19,Rest20,Rest21,Rest22,Glazyrina",
    };
    return detail::profile_from_rows(rows, 7);
}

/// Two-event weekend where the bronze medal changes hands after the winner
/// is disqualified: 2 races, 13 athletes.
inline Profile biathlon_weekend_profile() {
    static const char* const rows[] = {
        "Soukalová,Kuzmina,Rest01,Rest02,Rest03,Domracheva,Skardino,Rest04,Rest05,Rest06,Rest07,Rest08,Hildebrand",
        "Soukalová,Domracheva,Rest08,Hildebrand,Rest01,Rest02,Skardino,Rest03,Rest04,Rest05,Kuzmina,Rest06,Rest07",
    };
    return detail::profile_from_rows(rows, 2);
}

/// A season whose champion never won a race: 16 races, 17 riders.
inline Profile motogp_season_profile() {
    static const char* const rows[] = {
        "Azuma,Alzamora,Rider01,Rider02,Rider03,Rider04,Rider05,Rider06,Rider07,Rider08,Rider09,Rider10,Rider11,Rider12,Rider13,Rider14,Melandri",
        "Azuma,Rider14,Alzamora,Rider01,Rider02,Rider03,Rider04,Rider05,Rider06,Rider07,Rider08,Rider09,Rider10,Rider11,Rider12,Rider13,Melandri",
        "Azuma,Rider13,Alzamora,Rider14,Rider01,Rider02,Rider03,Rider04,Rider05,Rider06,Rider07,Rider08,Rider09,Rider10,Rider11,Rider12,Melandri",
        "Rider12,Rider13,Alzamora,Azuma,Rider14,Melandri,Rider01,Rider02,Rider03,Rider04,Rider05,Rider06,Rider07,Rider08,Rider09,Rider10,Rider11",
        "Rider11,Melandri,Rider12,Rider13,Rider14,Alzamora,Azuma,Rider01,Rider02,Rider03,Rider04,Rider05,Rider06,Rider07,Rider08,Rider09,Rider10",
        "Rider10,Alzamora,Melandri,Rider11,Rider12,Rider13,Rider14,Rider01,Rider02,Rider03,Rider04,Rider05,Rider06,Rider07,Rider08,Rider09,Azuma",
        "Azuma,Rider09,Rider10,Alzamora,Rider11,Rider12,Rider13,Melandri,Rider14,Rider01,Rider02,Rider03,Rider04,Rider05,Rider06,Rider07,Rider08",
        "Azuma,Rider08,Alzamora,Rider09,Melandri,Rider10,Rider11,Rider12,Rider13,Rider14,Rider01,Rider02,Rider03,Rider04,Rider05,Rider06,Rider07",
        "Melandri,Alzamora,Rider07,Rider08,Rider09,Azuma,Rider10,Rider11,Rider12,Rider13,Rider14,Rider01,Rider02,Rider03,Rider04,Rider05,Rider06",
        "Melandri,Rider06,Rider07,Rider08,Rider09,Alzamora,Rider10,Rider11,Rider12,Rider13,Rider14,Azuma,Rider01,Rider02,Rider03,Rider04,Rider05",
        "Melandri,Rider05,Rider06,Alzamora,Rider07,Rider08,Rider09,Rider10,Rider11,Azuma,Rider12,Rider13,Rider14,Rider01,Rider02,Rider03,Rider04",
        "Rider04,Alzamora,Rider05,Rider06,Rider07,Rider08,Rider09,Rider10,Rider11,Rider12,Rider13,Rider14,Rider01,Rider02,Rider03,Melandri,Azuma",
        "Melandri,Rider03,Rider04,Rider05,Azuma,Rider06,Rider07,Rider08,Rider09,Rider10,Rider11,Rider12,Rider13,Rider14,Alzamora,Rider01,Rider02",
        "Rider02,Rider03,Melandri,Rider04,Rider05,Rider06,Rider07,Rider08,Rider09,Rider10,Rider11,Rider12,Rider13,Azuma,Rider14,Rider01,Alzamora",
        "Rider01,Melandri,Alzamora,Rider02,Rider03,Azuma,Rider04,Rider05,Rider06,Rider07,Rider08,Rider09,Rider10,Rider11,Rider12,Rider13,Rider14",
        "Melandri,Alzamora,Rider14,Rider01,Rider02,Rider03,Rider04,Rider05,Rider06,Rider07,Rider08,Rider09,Rider10,Rider11,Rider12,Rider13,Azuma",
    };
    return detail::profile_from_rows(rows, 16);
}

/// Women's pole vault lags behind each meet's winning height (metres,
/// negative), six meets, top 8 positions, best to worst.
inline PerformanceTable vault_lags() {
    static const double lags[8][6] = {
        {-0.16, -0.30, -0.17, -0.54, -0.23, -0.29},
        {-0.38, -0.32, -0.40, -0.55, -0.28, -0.32},
        {-0.43, -0.41, -0.40, -0.57, -0.41, -0.34},
        {-0.45, -0.41, -0.48, -0.60, -0.44, -0.38},
        {-0.46, -0.44, -0.49, -0.66, -0.47, -0.40},
        {-0.49, -0.55, -0.50, -0.70, -0.50, -0.49},
        {-0.52, -0.69, -0.50, -0.82, -0.54, -0.50},
        {-0.56, -0.70, -0.56, -0.87, -0.60, -0.51},
    };
    std::vector<std::vector<double>> races(6, std::vector<double>(8));
    for (int race = 0; race < 6; ++race)
        for (int pos = 0; pos < 8; ++pos) races[race][pos] = lags[pos][race];
    return PerformanceTable(std::move(races));
}

}  // namespace podium::fixtures
