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

#include "ccalg/order.hpp"

#include <sstream>

#include "ccalg/errors.hpp"

namespace ccalg {

bool divides(const ModTerm& a, const ModTerm& b) { return a.pos == b.pos && divides(a.mono, b.mono); }

ModuleOrder ModuleOrder::top(MonoOrder m) {
    ModuleOrder o;
    o.strat_ = Position::Top;
    o.mono_ = m;
    return o;
}

ModuleOrder ModuleOrder::pot(MonoOrder m) {
    ModuleOrder o;
    o.strat_ = Position::Pot;
    o.mono_ = m;
    return o;
}

ModuleOrder ModuleOrder::schreyer(std::shared_ptr<const ModuleOrder> base, std::vector<ModTerm> leads) {
    if (!base) throw precondition_error("schreyer order requires a base order");
    ModuleOrder o;
    o.strat_ = Position::Schreyer;
    o.mono_ = base->mono_order();
    o.base_ = std::move(base);
    o.leads_ = std::move(leads);
    return o;
}

int ModuleOrder::cmp(const ModTerm& a, const ModTerm& b) const {
    switch (strat_) {
        case Position::Top: {
            int c = mono_.cmp(a.mono, b.mono);
            if (c != 0) return c;
            if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;  // earlier component is larger
            return 0;
        }
        case Position::Pot: {
            if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
            return mono_.cmp(a.mono, b.mono);
        }
        case Position::Schreyer: {
            const ModTerm& la = leads_.at(a.pos);
            const ModTerm& lb = leads_.at(b.pos);
            ModTerm ma{mono_mul(a.mono, la.mono), la.pos};
            ModTerm mb{mono_mul(b.mono, lb.mono), lb.pos};
            int c = base_->cmp(ma, mb);
            if (c != 0) return c;
            if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
            return 0;
        }
    }
    return 0;
}

std::string ModuleOrder::key() const {
    std::ostringstream os;
    switch (strat_) {
        case Position::Top:
            os << "top:" << mono_.str();
            break;
        case Position::Pot:
            os << "pot:" << mono_.str();
            break;
        case Position::Schreyer: {
            os << "schreyer[" << base_->key() << ";";
            for (const auto& l : leads_) {
                os << l.pos << ":";
                for (int e : l.mono) os << e << ",";
                os << "|";
            }
            os << "]";
            break;
        }
    }
    return os.str();
}

}  // namespace ccalg
