#include "recog/tournament.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>

namespace recog {

const char* relation_name(Relation r) {
    switch (r) {
        case Relation::FirstBetter: return "first_better";
        case Relation::SecondBetter: return "second_better";
        case Relation::Equivalent: return "equivalent";
    }
    return "?";
}

namespace {

PreferenceOutcome outcome_from_counts(std::uint64_t va, std::uint64_t vb,
                                      std::uint64_t total) {
    PreferenceOutcome out;
    out.first_wins = va;
    out.second_wins = vb;
    out.ties = total - va - vb;
    out.relation = va > vb   ? Relation::FirstBetter
                   : vb > va ? Relation::SecondBetter
                             : Relation::Equivalent;
    return out;
}

std::pair<std::uint64_t, std::uint64_t> count_wins(const std::vector<int>& ta,
                                                   const std::vector<int>& tb) {
    std::uint64_t va = 0;
    std::uint64_t vb = 0;
    for (std::size_t i = 0; i < ta.size(); ++i) {
        if (ta[i] < tb[i]) {
            ++va;
        } else if (tb[i] < ta[i]) {
            ++vb;
        }
    }
    return {va, vb};
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> pairwise_wins(const DecisionTree& a,
                                                      const DecisionTree& b,
                                                      const Universe& u) {
    const TimeProfile pa = time_profile(a, u);
    const TimeProfile pb = time_profile(b, u);
    return count_wins(pa.by_ordinal, pb.by_ordinal);
}

PreferenceOutcome compare(const DecisionTree& a, const DecisionTree& b, const Universe& u) {
    const auto [va, vb] = pairwise_wins(a, b, u);
    return outcome_from_counts(va, vb, u.pattern_count());
}

std::uint64_t TournamentMatrix::tie_count(std::size_t i, std::size_t j) const {
    if (i == j) return universe_size;
    return universe_size - wins[i][j] - wins[j][i];
}

PreferenceOutcome TournamentMatrix::outcome(std::size_t i, std::size_t j) const {
    return outcome_from_counts(wins[i][j], wins[j][i], universe_size);
}

TournamentMatrix tournament(std::span<const LabeledTree> algorithms, const Universe& u) {
    TournamentMatrix m;
    m.universe_size = u.pattern_count();
    std::vector<std::vector<int>> times;
    times.reserve(algorithms.size());
    for (const LabeledTree& a : algorithms) {
        m.labels.push_back(a.label);
        times.push_back(time_profile(a.tree, u).by_ordinal);
    }
    const std::size_t k = algorithms.size();
    m.wins.assign(k, std::vector<std::uint64_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const auto [vi, vj] = count_wins(times[i], times[j]);
            m.wins[i][j] = vi;
            m.wins[j][i] = vj;
        }
    }
    return m;
}

std::string TournamentMatrix::to_text() const {
    std::size_t width = 1;
    for (const auto& label : labels) width = std::max(width, label.size());
    for (const auto& row : wins) {
        for (std::uint64_t w : row) width = std::max(width, std::to_string(w).size());
    }
    std::ostringstream out;
    out << std::setw(static_cast<int>(width)) << "V" << " ";
    for (const auto& label : labels) out << " " << std::setw(static_cast<int>(width)) << label;
    out << "\n";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out << std::setw(static_cast<int>(width)) << labels[i] << " ";
        for (std::size_t j = 0; j < labels.size(); ++j) {
            if (i == j) {
                out << " " << std::setw(static_cast<int>(width)) << ".";
            } else {
                out << " " << std::setw(static_cast<int>(width)) << wins[i][j];
            }
        }
        out << "\n";
    }
    return out.str();
}

std::string TournamentMatrix::to_csv() const {
    std::ostringstream out;
    out << "V";
    for (const auto& label : labels) out << "," << label;
    out << "\n";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out << labels[i];
        for (std::size_t j = 0; j < labels.size(); ++j) out << "," << wins[i][j];
        out << "\n";
    }
    return out.str();
}

namespace {

CycleReport cycle_from_pairs(
    const std::vector<std::string>& labels,
    const std::function<std::pair<BigInt, BigInt>(std::size_t, std::size_t)>& wins_of) {
    CycleReport report;
    report.ok = true;
    const std::size_t k = labels.size();
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = (i + 1) % k;
        auto [forward, backward] = wins_of(i, j);
        CycleStep step;
        step.from = labels[i];
        step.to = labels[j];
        step.wins_forward = forward;
        step.wins_backward = backward;
        step.better = forward > backward;
        report.ok = report.ok && step.better;
        report.steps.push_back(std::move(step));
    }
    return report;
}

}  // namespace

CycleReport verify_cycle(std::span<const LabeledTree> algorithms, const Universe& u) {
    if (algorithms.size() < 2) {
        throw DomainError("verify_cycle: need at least two algorithms");
    }
    std::vector<std::string> labels;
    std::vector<std::vector<int>> times;
    for (const LabeledTree& a : algorithms) {
        labels.push_back(a.label);
        times.push_back(time_profile(a.tree, u).by_ordinal);
    }
    return cycle_from_pairs(labels, [&](std::size_t i, std::size_t j) {
        const auto [vi, vj] = count_wins(times[i], times[j]);
        return std::pair<BigInt, BigInt>(vi, vj);
    });
}

std::pair<BigInt, BigInt> image_level_wins(int n, int p, int q) {
    if (n < 3) throw DomainError("image_level_wins: n must be >= 3");
    if (p < 0 || p >= n || q < 0 || q >= n) {
        throw DomainError("image_level_wins: spine index out of range 0.." +
                          std::to_string(n - 1));
    }
    const BigInt image_size = BigInt(1) << (n * (n - 1) / 2);
    int p_faster_images = 0;
    int q_faster_images = 0;
    for (int j = 0; j < n; ++j) {
        const int tp = (j + p) % n;  // time minus one on image j
        const int tq = (j + q) % n;
        if (tp < tq) ++p_faster_images;
        if (tq < tp) ++q_faster_images;
    }
    // Image n is recognized in time n by every spine: always a tie.
    return {image_size * p_faster_images, image_size * q_faster_images};
}

CycleReport verify_cycle_image_level(int n) {
    if (n < 3) throw DomainError("verify_cycle_image_level: n must be >= 3");
    std::vector<std::string> labels;
    for (int q = 0; q < n; ++q) labels.push_back("A" + std::to_string(q));
    return cycle_from_pairs(labels, [&](std::size_t i, std::size_t j) {
        return image_level_wins(n, static_cast<int>(i), static_cast<int>(j));
    });
}

std::string CycleReport::to_text() const {
    std::ostringstream out;
    for (const CycleStep& s : steps) {
        out << s.from << " vs " << s.to << ": " << s.wins_forward << "-" << s.wins_backward
            << (s.better ? " (better)" : " (NOT better)") << "\n";
    }
    out << "cycle: " << (ok ? "holds" : "broken") << "\n";
    return out.str();
}

TimeTable render_time_table(std::span<const LabeledTree> algorithms, const Universe& u) {
    TimeTable table;
    for (const Image& img : u.images()) table.row_names.push_back(img.name);
    std::vector<TimeProfile> profiles;
    for (const LabeledTree& a : algorithms) {
        table.col_names.push_back(a.label);
        profiles.push_back(time_profile(a.tree, u));
    }
    table.cells.assign(table.row_names.size(), {});
    for (std::size_t r = 0; r < table.row_names.size(); ++r) {
        for (const TimeProfile& p : profiles) {
            table.cells[r].push_back(render_times(p.by_image[r]));
        }
    }
    return table;
}

std::string TimeTable::to_text() const {
    std::vector<std::size_t> widths(col_names.size() + 1, 5);
    for (const auto& name : row_names) widths[0] = std::max(widths[0], name.size());
    for (std::size_t c = 0; c < col_names.size(); ++c) {
        widths[c + 1] = std::max(widths[c + 1], col_names[c].size());
        for (const auto& row : cells) widths[c + 1] = std::max(widths[c + 1], row[c].size());
    }
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(widths[0])) << "image";
    for (std::size_t c = 0; c < col_names.size(); ++c) {
        out << "  " << std::right << std::setw(static_cast<int>(widths[c + 1])) << col_names[c];
    }
    out << "\n";
    for (std::size_t r = 0; r < row_names.size(); ++r) {
        out << std::left << std::setw(static_cast<int>(widths[0])) << row_names[r];
        for (std::size_t c = 0; c < col_names.size(); ++c) {
            out << "  " << std::right << std::setw(static_cast<int>(widths[c + 1]))
                << cells[r][c];
        }
        out << "\n";
    }
    return out.str();
}

std::string TimeTable::to_csv() const {
    std::ostringstream out;
    out << "image";
    for (const auto& name : col_names) out << "," << name;
    out << "\n";
    for (std::size_t r = 0; r < row_names.size(); ++r) {
        out << row_names[r];
        for (const auto& cell : cells[r]) out << "," << cell;
        out << "\n";
    }
    return out.str();
}

}  // namespace recog
