#include "nkirby/diagram.hpp"

#include "nkirby/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

namespace nkirby {

bool Diagram::has_id(std::string_view id) const noexcept {
    return dotted_index(id).has_value() || framed_index(id).has_value();
}

bool Diagram::has_dotted(std::string_view id) const noexcept { return dotted_index(id).has_value(); }

std::optional<std::size_t> Diagram::dotted_index(std::string_view id) const noexcept {
    for (std::size_t i = 0; i < dotted_.size(); ++i)
        if (dotted_[i].id == id) return i;
    return std::nullopt;
}

std::optional<std::size_t> Diagram::framed_index(std::string_view id) const noexcept {
    for (std::size_t i = 0; i < framed_.size(); ++i)
        if (framed_[i].id == id) return i;
    return std::nullopt;
}

const FramedComponent* Diagram::find_framed(std::string_view id) const noexcept {
    auto idx = framed_index(id);
    return idx ? &framed_[*idx] : nullptr;
}

void Diagram::check_generators(const Letters& w) const {
    for (const Letter& l : w) {
        if (!has_dotted(l.id)) throw Error(ErrorCode::UnknownGenerator, "no dotted component '" + l.id + "'");
    }
}

void Diagram::insert_dotted(std::string id) {
    if (has_id(id)) throw Error(ErrorCode::DuplicateId, "id '" + id + "' already in use");
    dotted_.push_back(DottedComponent{std::move(id)});
}

void Diagram::insert_framed(std::string id, const Letters& raw_word, Framing framing) {
    if (has_id(id)) throw Error(ErrorCode::DuplicateId, "id '" + id + "' already in use");
    if (framing.group() != group()) {
        throw Error(ErrorCode::GroupMismatch, "framing in " + to_string(framing.group()) +
                                                  " but diagram framings live in " + to_string(group()));
    }
    check_generators(raw_word);
    framed_.push_back(FramedComponent{std::move(id), normalize_word(dim_, raw_word), framing});
}

void Diagram::set_framed(std::string_view id, const Letters& raw_word, Framing framing) {
    auto idx = framed_index(id);
    if (!idx) throw Error(ErrorCode::UnknownComponent, "no framed component '" + std::string(id) + "'");
    if (framing.group() != group()) throw Error(ErrorCode::GroupMismatch, "framing group mismatch");
    check_generators(raw_word);
    framed_[*idx].word = normalize_word(dim_, raw_word);
    framed_[*idx].framing = framing;
}

void Diagram::remove_dotted(std::string_view id) {
    auto idx = dotted_index(id);
    if (!idx) throw Error(ErrorCode::UnknownComponent, "no dotted component '" + std::string(id) + "'");
    for (const FramedComponent& f : framed_) {
        if (f.word.mentions(id)) {
            throw Error(ErrorCode::NotCancelling, "dotted '" + std::string(id) + "' still referenced by '" + f.id + "'");
        }
    }
    dotted_.erase(dotted_.begin() + static_cast<std::ptrdiff_t>(*idx));
}

void Diagram::remove_framed(std::string_view id) {
    auto idx = framed_index(id);
    if (!idx) throw Error(ErrorCode::UnknownComponent, "no framed component '" + std::string(id) + "'");
    framed_.erase(framed_.begin() + static_cast<std::ptrdiff_t>(*idx));
}

Diagram new_diagram(DimSpec dim) { return Diagram(dim); }

Diagram add_dotted(Diagram d, std::string id) {
    d.insert_dotted(std::move(id));
    return d;
}

Diagram add_framed(Diagram d, std::string id, const Letters& word, Framing framing) {
    d.insert_framed(std::move(id), word, framing);
    return d;
}

Diagram add_framed(Diagram d, std::string id, const Letters& word, std::int64_t framing) {
    const Framing f = normalize(d.group(), framing);
    return add_framed(std::move(d), std::move(id), word, f);
}

LinkingMatrix linking_matrix(const Diagram& d) {
    LinkingMatrix lm;
    for (const auto& f : d.framed()) lm.framed_ids.push_back(f.id);
    for (const auto& e : d.dotted()) lm.dotted_ids.push_back(e.id);
    lm.entries = IntMatrix(d.framed().size(), d.dotted().size());
    for (std::size_t r = 0; r < d.framed().size(); ++r) {
        for (const Letter& l : d.framed()[r].word.letters()) {
            const auto c = d.dotted_index(l.id);
            lm.entries(r, *c) += l.sign;
        }
    }
    return lm;
}

Diagram transport(const Diagram& d, int n_new) {
    if (d.dim().is_source()) {
        throw Error(ErrorCode::InvalidDim, "source-4d diagrams are imported with induce, not transported");
    }
    Diagram out{DimSpec(n_new, d.dim().k())};
    for (const auto& e : d.dotted()) out.insert_dotted(e.id);
    for (const auto& f : d.framed()) out.insert_framed(f.id, f.word.letters(), normalize(out.group(), f.framing.value()));
    return out;
}

std::string fresh_id(const Diagram& d, std::string_view prefix) {
    for (std::size_t n = 1;; ++n) {
        std::string candidate = std::string(prefix) + std::to_string(n);
        if (!d.has_id(candidate)) return candidate;
    }
}

namespace {

using Signature = std::vector<std::pair<std::string, std::int64_t>>;

/// Sorted (word, framing) multiset of `d` after renaming its dotted ids.
Signature framed_signature(const Diagram& d, const std::map<std::string, std::string>& renaming) {
    Signature sig;
    sig.reserve(d.framed().size());
    for (const auto& f : d.framed()) {
        Letters w = f.word.letters();
        for (Letter& l : w) l.id = renaming.at(l.id);
        sig.emplace_back(normalize_word(d.dim(), w).to_string(), f.framing.value());
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

/// Renaming-independent profile of a dotted generator: sorted exponent sums
/// over all framed words.
std::vector<std::int64_t> generator_profile(const Diagram& d, const std::string& id) {
    std::vector<std::int64_t> p;
    for (const auto& f : d.framed()) p.push_back(f.word.exponent_sum(id));
    std::sort(p.begin(), p.end());
    return p;
}

}  // namespace

bool canonically_equal(const Diagram& a, const Diagram& b) {
    if (!(a.dim() == b.dim())) return false;
    if (a.dotted().size() != b.dotted().size() || a.framed().size() != b.framed().size()) return false;

    const std::size_t n = a.dotted().size();
    std::vector<std::vector<std::int64_t>> pa(n), pb(n);
    for (std::size_t i = 0; i < n; ++i) {
        pa[i] = generator_profile(a, a.dotted()[i].id);
        pb[i] = generator_profile(b, b.dotted()[i].id);
    }

    std::map<std::string, std::string> identity_b;
    for (const auto& e : b.dotted()) identity_b[e.id] = e.id;
    const Signature target = framed_signature(b, identity_b);

    std::map<std::string, std::string> renaming;
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
        if (i == n) return framed_signature(a, renaming) == target;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || pa[i] != pb[j]) continue;
            used[j] = true;
            renaming[a.dotted()[i].id] = b.dotted()[j].id;
            if (search(i + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    return search(0);
}

}  // namespace nkirby
