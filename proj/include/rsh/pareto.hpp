#ifndef RSH_PARETO_HPP
#define RSH_PARETO_HPP

#include <map>
#include <vector>

namespace rsh {

// Two-objective vector with per-coordinate optimization direction.
// Coordinates are kept in an exact integer scale by the callers that need
// exactness (vertex cover stores half-integers as doubled ints).
template <class T>
struct ObjVec {
    T a{};
    T b{};
    bool a_minimize = true;
    bool b_minimize = true;

    friend bool operator==(const ObjVec& x, const ObjVec& y) {
        return x.a == y.a && x.b == y.b;
    }
};

// x weakly dominates y: at least as good in both coordinates.
template <class T>
bool weakly_dominates(const ObjVec<T>& x, const ObjVec<T>& y) {
    const bool a_ok = x.a_minimize ? x.a <= y.a : x.a >= y.a;
    const bool b_ok = x.b_minimize ? x.b <= y.b : x.b >= y.b;
    return a_ok && b_ok;
}

template <class T>
bool strictly_dominates(const ObjVec<T>& x, const ObjVec<T>& y) {
    return weakly_dominates(x, y) && !(x == y);
}

// Archive of mutually non-dominated solutions keyed by the first objective
// value. The non-dominated set has at most one member per first-objective
// value, so the key is unique.
//
// Update semantics: the candidate is inserted iff no member strictly
// dominates it; on insertion every member it weakly dominates (equal
// vectors included) is removed first.
template <class Sol, class T>
class ParetoArchive {
public:
    struct Entry {
        Sol solution;
        ObjVec<T> value;
    };

    bool update(const Sol& sol, const ObjVec<T>& val) {
        for (const auto& [key, entry] : members_)
            if (strictly_dominates(entry.value, val)) return false;
        for (auto it = members_.begin(); it != members_.end();) {
            if (weakly_dominates(val, it->second.value))
                it = members_.erase(it);
            else
                ++it;
        }
        members_[val.a] = Entry{sol, val};
        return true;
    }

    std::size_t size() const { return members_.size(); }
    const std::map<T, Entry>& members() const { return members_; }

    const Entry& nth(std::size_t idx) const {
        auto it = members_.begin();
        std::advance(it, idx);
        return it->second;
    }

    const Entry* find_key(const T& key) const {
        auto it = members_.find(key);
        return it == members_.end() ? nullptr : &it->second;
    }

    bool pairwise_non_dominated() const {
        for (const auto& [ka, ea] : members_)
            for (const auto& [kb, eb] : members_) {
                if (ka == kb) continue;
                if (weakly_dominates(ea.value, eb.value)) return false;
            }
        return true;
    }

private:
    std::map<T, Entry> members_;
};

} // namespace rsh

#endif
