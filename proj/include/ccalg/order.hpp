/*
   Copyright 2026 The ccalg authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CCALG_ORDER_HPP
#define CCALG_ORDER_HPP

#include <memory>
#include <string>
#include <vector>

#include "ccalg/ring.hpp"

namespace ccalg {

/// A module term: a monomial sitting in one component of a free module.
struct ModTerm {
    Monomial mono;
    int pos = 0;

    bool operator==(const ModTerm&) const = default;
};

/// Term divisibility: same component and monomial divisibility.
bool divides(const ModTerm& a, const ModTerm& b);

/// Total order on module terms: a scalar monomial order plus a position
/// strategy. Schreyer orders are induced from the leading terms of a list of
/// module generators at the previous level, ties broken by smaller index.
class ModuleOrder {
public:
    enum class Position { Top, Pot, Schreyer };

    static ModuleOrder top(MonoOrder m);
    static ModuleOrder pot(MonoOrder m);
    static ModuleOrder schreyer(std::shared_ptr<const ModuleOrder> base, std::vector<ModTerm> leads);

    /// -1, 0, +1 for a < b, a == b, a > b.
    int cmp(const ModTerm& a, const ModTerm& b) const;

    const MonoOrder& mono_order() const { return mono_; }
    Position strategy() const { return strat_; }

    /// Deterministic key used for Groebner caches.
    std::string key() const;

private:
    Position strat_ = Position::Top;
    MonoOrder mono_;
    std::shared_ptr<const ModuleOrder> base_;  // Schreyer only
    std::vector<ModTerm> leads_;               // Schreyer only
};

}  // namespace ccalg

#endif
