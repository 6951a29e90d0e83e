#include "kazhdan/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace kazhdan {

RewriteSystem::RewriteSystem(GeneratorSet symbols) : symbols_(std::move(symbols)) {}

void RewriteSystem::add_rule(Word lhs, Word rhs)
{
    if (lhs.size() >= length_count_.size()) {
        length_count_.resize(lhs.size() + 1, 0);
    }
    ++length_count_[lhs.size()];
    index_.emplace(std::move(lhs), std::move(rhs));
}

void RewriteSystem::remove_rule(const Word& lhs)
{
    if (index_.erase(lhs) > 0) {
        --length_count_[lhs.size()];
    }
}

Word RewriteSystem::reduce(const Word& w) const
{
    Word out;
    out.reserve(w.size());
    Word pending(w.rbegin(), w.rend());
    Word probe;
    while (!pending.empty()) {
        out.push_back(pending.back());
        pending.pop_back();
        const std::size_t maxlen = std::min(out.size() + 1, length_count_.size());
        for (std::size_t len = 1; len < maxlen; ++len) {
            if (length_count_[len] == 0) {
                continue;
            }
            probe.assign(out, out.size() - len, len);
            auto it = index_.find(probe);
            if (it != index_.end()) {
                out.resize(out.size() - len);
                pending.append(it->second.rbegin(), it->second.rend());
                break;
            }
        }
    }
    return out;
}

bool RewriteSystem::is_reducible(const Word& w) const
{
    Word probe;
    for (std::size_t end = 1; end <= w.size(); ++end) {
        const std::size_t maxlen = std::min(end + 1, length_count_.size());
        for (std::size_t len = 1; len < maxlen; ++len) {
            if (length_count_[len] == 0) {
                continue;
            }
            probe.assign(w, end - len, len);
            if (index_.count(probe)) {
                return true;
            }
        }
    }
    return false;
}

std::vector<Rule> RewriteSystem::rules() const
{
    std::vector<Rule> out;
    out.reserve(index_.size());
    for (const auto& [l, r] : index_) {
        out.push_back({l, r});
    }
    std::sort(out.begin(), out.end(),
              [](const Rule& a, const Rule& b) { return shortlex_less(a.lhs, b.lhs); });
    return out;
}

namespace {

struct CriticalPair {
    std::size_t length;
    std::uint64_t seq;
    std::uint32_t left;
    std::uint32_t right;
    std::uint32_t overlap;

    bool operator>(const CriticalPair& o) const
    {
        return length != o.length ? length > o.length : seq > o.seq;
    }
};

class Completion {
public:
    Completion(const PresentationSpec& spec, const CompletionBudget& budget)
        : symbols_(spec.symbols), budget_(budget), live_(spec.symbols)
    {
        if (budget_.max_overlap_length == 0) {
            budget_.max_overlap_length = 2 * budget_.max_rule_length;
        }
    }

    void seed(const PresentationSpec& spec)
    {
        for (std::size_t a = 0; a < symbols_.size(); ++a) {
            const auto x = static_cast<Letter>(a);
            pending_.emplace_back(Word{x, symbols_.inverse(x)}, Word{});
        }
        for (const auto& r : spec.relators) {
            const std::size_t half = (r.size() + 1) / 2;
            pending_.emplace_back(r.substr(0, half), symbols_.inverse(r.substr(half)));
        }
        drain();
    }

    void run()
    {
        while (!pairs_.empty()) {
            if (alive_count_ > budget_.max_rules) {
                truncated_ = true;
                break;
            }
            const CriticalPair p = pairs_.top();
            pairs_.pop();
            if (!alive_[p.left] || !alive_[p.right]) {
                continue;
            }
            const Rule& a = rules_[p.left];
            const Rule& b = rules_[p.right];
            Word u = a.rhs + b.lhs.substr(p.overlap);
            Word v = a.lhs.substr(0, a.lhs.size() - p.overlap) + b.rhs;
            pending_.emplace_back(std::move(u), std::move(v));
            drain();
        }
    }

    RewriteSystem result() &&
    {
        RewriteSystem out(symbols_);
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            if (alive_[i]) {
                out.add_rule(rules_[i].lhs, live_.reduce(rules_[i].rhs));
            }
        }
        out.set_complete(!truncated_ && pairs_.empty());
        return out;
    }

private:
    void drain()
    {
        while (!pending_.empty()) {
            auto [u, v] = std::move(pending_.front());
            pending_.pop_front();
            u = live_.reduce(u);
            v = live_.reduce(v);
            if (u == v) {
                continue;
            }
            if (shortlex_less(u, v)) {
                std::swap(u, v);
            }
            if (u.size() > budget_.max_rule_length) {
                truncated_ = true;
                continue;
            }
            insert(std::move(u), std::move(v));
        }
    }

    void insert(Word lhs, Word rhs)
    {
        const auto id = static_cast<std::uint32_t>(rules_.size());
        rules_.push_back({lhs, rhs});
        alive_.push_back(true);
        ++alive_count_;

        // Rules whose left side contains the new one are no longer needed
        // as rules; their content goes back through the equation queue.
        for (std::uint32_t i = 0; i < id; ++i) {
            if (!alive_[i]) {
                continue;
            }
            if (rules_[i].lhs.find(lhs) != Word::npos) {
                alive_[i] = false;
                --alive_count_;
                live_.remove_rule(rules_[i].lhs);
                pending_.emplace_back(rules_[i].lhs, rules_[i].rhs);
            }
        }
        live_.add_rule(lhs, rhs);
        for (std::uint32_t i = 0; i < id; ++i) {
            if (alive_[i] && rules_[i].rhs.find(lhs) != Word::npos) {
                rules_[i].rhs = live_.reduce(rules_[i].rhs);
            }
        }
        for (std::uint32_t i = 0; i <= id; ++i) {
            if (alive_[i]) {
                queue_overlaps(id, i);
                if (i != id) {
                    queue_overlaps(i, id);
                }
            }
        }
    }

    void queue_overlaps(std::uint32_t left, std::uint32_t right)
    {
        const Word& a = rules_[left].lhs;
        const Word& b = rules_[right].lhs;
        const std::size_t kmax = std::min(a.size(), b.size());
        for (std::size_t k = 1; k < kmax; ++k) {
            if (a.compare(a.size() - k, k, b, 0, k) != 0) {
                continue;
            }
            const std::size_t len = a.size() + b.size() - k;
            if (len > budget_.max_overlap_length) {
                truncated_ = true;
                continue;
            }
            pairs_.push({len, seq_++, left, right, static_cast<std::uint32_t>(k)});
        }
    }

    GeneratorSet symbols_;
    CompletionBudget budget_;
    RewriteSystem live_;
    std::vector<Rule> rules_;
    std::vector<bool> alive_;
    std::size_t alive_count_ = 0;
    std::deque<std::pair<Word, Word>> pending_;
    std::priority_queue<CriticalPair, std::vector<CriticalPair>, std::greater<>> pairs_;
    std::uint64_t seq_ = 0;
    bool truncated_ = false;
};

}  // namespace

RewriteSystem bounded_completion(const PresentationSpec& spec, const CompletionBudget& budget)
{
    if (budget.max_rules == 0 || budget.max_rule_length == 0) {
        throw InputError("rewrite budget must be positive");
    }
    Completion kb(spec, budget);
    kb.seed(spec);
    kb.run();
    return std::move(kb).result();
}

}  // namespace kazhdan
