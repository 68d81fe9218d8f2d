#include "termcut/typevec.hpp"

#include <algorithm>

#include "termcut/error.hpp"

namespace termcut {

TypeVector::TypeVector(std::vector<std::string> terminals) : terminals_(std::move(terminals)) {
    if (terminals_.size() < 2) throw InvalidInput("type vector needs at least 2 terminals");
    if (terminals_.size() > 31) throw InvalidInput("too many terminals");
    std::vector<std::string> sorted = terminals_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidInput("duplicate terminal identifier");
}

void TypeVector::add(Mask subset, const Rat& value) {
    Mask full = full_mask(terminal_count());
    if (subset == 0 || subset >= full)
        throw InvalidInput("type vector subset must be proper and nonempty");
    if (value < 0) throw InvalidInput("type vector values must be nonnegative");
    if (value == 0) return;
    Rat& slot = entries_[subset];
    slot += value;
    if (slot == 0) entries_.erase(subset);
}

void TypeVector::set(Mask subset, const Rat& value) {
    Mask full = full_mask(terminal_count());
    if (subset == 0 || subset >= full)
        throw InvalidInput("type vector subset must be proper and nonempty");
    if (value < 0) throw InvalidInput("type vector values must be nonnegative");
    if (value == 0)
        entries_.erase(subset);
    else
        entries_[subset] = value;
}

Rat TypeVector::value(Mask subset) const {
    auto it = entries_.find(subset);
    return it == entries_.end() ? Rat(0) : it->second;
}

std::vector<Mask> TypeVector::support() const {
    std::vector<Mask> out;
    out.reserve(entries_.size());
    for (const auto& [mask, value] : entries_) out.push_back(mask);
    return out;
}

int TypeVector::terminal_index(const std::string& id) const {
    for (int i = 0; i < terminal_count(); ++i)
        if (terminals_[i] == id) return i;
    return -1;
}

TypeVector TypeVector::reordered(const std::vector<std::string>& new_terminals) const {
    TypeVector out(new_terminals);
    if (new_terminals.size() != terminals_.size())
        throw InvalidInput("reordered: terminal sets differ");
    std::vector<int> to_new(terminals_.size());
    for (std::size_t i = 0; i < terminals_.size(); ++i) {
        int j = out.terminal_index(terminals_[i]);
        if (j < 0) throw InvalidInput("reordered: terminal sets differ");
        to_new[i] = j;
    }
    for (const auto& [mask, value] : entries_) {
        Mask remapped = 0;
        for (int i : mask_indices(mask)) remapped |= Mask{1} << to_new[i];
        out.set(remapped, value);
    }
    return out;
}

TypeVector tv_add(const TypeVector& a, const TypeVector& b) {
    if (a.terminals() != b.terminals()) throw InvalidInput("tv_add: terminal sets differ");
    TypeVector out = a;
    for (const auto& [mask, value] : b.entries()) out.add(mask, value);
    return out;
}

TypeVector tv_scale(const TypeVector& v, const Rat& factor) {
    if (factor < 0) throw InvalidInput("tv_scale: factor must be nonnegative");
    TypeVector out(v.terminals());
    for (const auto& [mask, value] : v.entries()) out.set(mask, value * factor);
    return out;
}

TerminalMetric::TerminalMetric(std::vector<std::string> terminals)
    : terminals_(std::move(terminals)) {
    if (terminals_.size() < 2) throw InvalidInput("metric needs at least 2 terminals");
    dist_.assign(terminals_.size() * terminals_.size(), Rat(0));
}

const Rat& TerminalMetric::at(int i, int j) const {
    return dist_[static_cast<std::size_t>(i) * terminals_.size() + j];
}

void TerminalMetric::set(int i, int j, const Rat& value) {
    if (i == j) throw InvalidInput("metric diagonal is fixed at zero");
    if (value < 0) throw InvalidInput("metric values must be nonnegative");
    dist_[static_cast<std::size_t>(i) * terminals_.size() + j] = value;
    dist_[static_cast<std::size_t>(j) * terminals_.size() + i] = value;
}

TerminalMetric TerminalMetric::validated(std::vector<std::string> terminals,
                                         std::vector<Rat> upper_triangle) {
    TerminalMetric m(std::move(terminals));
    int k = m.terminal_count();
    if (upper_triangle.size() != static_cast<std::size_t>(k) * (k - 1) / 2)
        throw InvalidInput("metric table has wrong size");
    std::size_t idx = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) m.set(i, j, upper_triangle[idx++]);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l)
                if (m.at(i, j) + m.at(j, l) < m.at(i, l))
                    throw InvalidInput("metric violates the triangle inequality");
    return m;
}

TerminalMetric induced_metric(const TypeVector& v) {
    TerminalMetric m(v.terminals());
    int k = v.terminal_count();
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            Rat d(0);
            for (const auto& [mask, value] : v.entries())
                if (cuts_pair(mask, i, j)) d += value;
            m.set(i, j, d);
        }
    }
    return m;
}

bool dominates(const TerminalMetric& d1, const TerminalMetric& d2,
               std::pair<int, int>* witness) {
    if (d1.terminals() != d2.terminals())
        throw InvalidInput("dominates: terminal sets differ");
    int k = d1.terminal_count();
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (d1.at(i, j) < d2.at(i, j)) {
                if (witness) *witness = {i, j};
                return false;
            }
        }
    }
    return true;
}

bool dominates(const TerminalMetric& d1, const TerminalMetric& d2) {
    return dominates(d1, d2, nullptr);
}

bool is_laminar(const std::vector<Mask>& sets) {
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (!laminar_pair(sets[i], sets[j])) return false;
    return true;
}

Rat weighted_cut(const TypeVector& pi, const TypeVector& v) {
    if (pi.terminals() != v.terminals())
        throw InvalidInput("weighted_cut: terminal sets differ");
    Rat total(0);
    for (const auto& [mask, value] : v.entries()) total += value * pi.value(mask);
    return total;
}

}  // namespace termcut
