#pragma once

#include "nkirby/framing.hpp"
#include "nkirby/int_matrix.hpp"
#include "nkirby/word.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nkirby {

struct DottedComponent {
    std::string id;

    friend bool operator==(const DottedComponent&, const DottedComponent&) = default;
};

struct FramedComponent {
    std::string id;
    Word word;
    Framing framing;

    friend bool operator==(const FramedComponent&, const FramedComponent&) = default;
};

/// Combinatorial (n,k)-Kirby diagram: a dotted trivial link (the (k-1)-handles)
/// and framed components whose attaching data is a word in the dotted
/// generators. Component ids share one namespace and are preserved by every
/// operation. All words and framings are kept normalised for `dim`.
class Diagram {
public:
    explicit Diagram(DimSpec dim) : dim_(dim) {}

    const DimSpec& dim() const noexcept { return dim_; }
    FramingGroup group() const noexcept { return framing_group(dim_); }
    const std::vector<DottedComponent>& dotted() const noexcept { return dotted_; }
    const std::vector<FramedComponent>& framed() const noexcept { return framed_; }

    bool has_id(std::string_view id) const noexcept;
    bool has_dotted(std::string_view id) const noexcept;
    const FramedComponent* find_framed(std::string_view id) const noexcept;
    std::optional<std::size_t> framed_index(std::string_view id) const noexcept;
    std::optional<std::size_t> dotted_index(std::string_view id) const noexcept;

    /// Mutators keep every invariant; they throw DuplicateId,
    /// UnknownGenerator, GroupMismatch or UnknownComponent.
    void insert_dotted(std::string id);
    void insert_framed(std::string id, const Letters& raw_word, Framing framing);
    void set_framed(std::string_view id, const Letters& raw_word, Framing framing);
    void remove_dotted(std::string_view id);
    void remove_framed(std::string_view id);

    /// Substitutes letters in every framed word and renormalises.
    template <class Fn>
    void rewrite_words(Fn&& fn) {
        for (FramedComponent& f : framed_) f.word = normalize_word(dim_, fn(f.word.letters()));
    }

    void check_generators(const Letters& w) const;

    /// Strict equality: same ids in the same order.
    friend bool operator==(const Diagram&, const Diagram&) = default;

private:
    DimSpec dim_;
    std::vector<DottedComponent> dotted_;
    std::vector<FramedComponent> framed_;
};

Diagram new_diagram(DimSpec dim);
Diagram add_dotted(Diagram d, std::string id);
Diagram add_framed(Diagram d, std::string id, const Letters& word, Framing framing);
/// Convenience overload: the integer is normalised into the diagram's group.
Diagram add_framed(Diagram d, std::string id, const Letters& word, std::int64_t framing);

/// Rows follow framed components, columns follow dotted components.
struct LinkingMatrix {
    std::vector<std::string> framed_ids;
    std::vector<std::string> dotted_ids;
    IntMatrix entries;
};

LinkingMatrix linking_matrix(const Diagram& d);

/// Same combinatorial data read in dimension n_new (X x B^{n_new-n}, or the
/// factor when shrinking). Throws InvalidDim.
Diagram transport(const Diagram& d, int n_new);

/// Equality up to component names and order: dims match and there is a
/// renaming of dotted generators under which the multisets of
/// (normalised word, framing) agree.
bool canonically_equal(const Diagram& a, const Diagram& b);

/// A fresh component id `<prefix><n>` not used in `d`.
std::string fresh_id(const Diagram& d, std::string_view prefix);

}  // namespace nkirby
