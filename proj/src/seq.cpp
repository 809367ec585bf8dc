#include "cobweb/seq.hpp"

#include <charconv>
#include <limits>

#include "cobweb/errors.hpp"

namespace cobweb {

namespace {

unsigned long parse_unsigned(std::string_view text, std::string_view what)
{
    unsigned long value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc() || ptr != last)
        throw InvalidParameter("invalid " + std::string(what) + ": '" + std::string(text) + "'");
    return value;
}

} // namespace

FSequence::FSequence(SequenceKind kind, unsigned long param, std::vector<Integer> custom,
                     Integer zero_term)
    : kind_(kind), param_(param), custom_(std::move(custom)), zero_term_(std::move(zero_term))
{
}

FSequence FSequence::naturals() { return {SequenceKind::naturals, 0, {}, 0}; }

FSequence FSequence::fibonacci() { return {SequenceKind::fibonacci, 0, {}, 0}; }

FSequence FSequence::gaussian(unsigned long q)
{
    if (q < 2) throw InvalidParameter("gaussian sequence needs q >= 2, got " + std::to_string(q));
    return {SequenceKind::gaussian, q, {}, 0};
}

FSequence FSequence::constant(unsigned long c)
{
    if (c < 1) throw InvalidParameter("constant sequence needs c >= 1");
    return {SequenceKind::constant, c, {}, Integer(c)};
}

FSequence FSequence::custom(std::vector<Integer> terms, Integer zero_term)
{
    for (std::size_t i = 0; i < terms.size(); ++i)
        if (terms[i] < 1)
            throw InvalidParameter("custom term at index " + std::to_string(i + 1) +
                                   " must be >= 1, got " + terms[i].get_str());
    if (zero_term < 0) throw InvalidParameter("custom zero term must be >= 0");
    return {SequenceKind::custom, 0, std::move(terms), std::move(zero_term)};
}

std::optional<int> FSequence::max_index() const
{
    if (kind_ == SequenceKind::custom) return static_cast<int>(custom_.size());
    return std::nullopt;
}

Integer FSequence::term(int k) const
{
    if (k < 0) throw IndexOutOfRange("negative sequence index " + std::to_string(k));
    if (k == 0) return zero_term_;
    switch (kind_) {
    case SequenceKind::naturals:
        return Integer(k);
    case SequenceKind::fibonacci: {
        Integer out;
        mpz_fib_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
        return out;
    }
    case SequenceKind::gaussian: {
        // 1 + q + ... + q^(k-1) by Horner.
        Integer out = 0;
        for (int i = 0; i < k; ++i) out = out * param_ + 1;
        return out;
    }
    case SequenceKind::constant:
        return Integer(param_);
    case SequenceKind::custom:
        if (static_cast<std::size_t>(k) > custom_.size())
            throw IndexOutOfRange("custom sequence has " + std::to_string(custom_.size()) +
                                  " terms, index " + std::to_string(k) + " requested");
        return custom_[static_cast<std::size_t>(k) - 1];
    }
    return 0;
}

std::size_t FSequence::term_size(int k) const
{
    Integer t = term(k);
    if (!t.fits_ulong_p() || t.get_ui() > std::numeric_limits<std::size_t>::max() / 2)
        throw DomainError("term " + std::to_string(k) + " is too large for a level size");
    return static_cast<std::size_t>(t.get_ui());
}

std::vector<Integer> FSequence::terms(int n) const
{
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) out.push_back(term(k));
    return out;
}

std::string FSequence::descriptor() const
{
    switch (kind_) {
    case SequenceKind::naturals:
        return "naturals";
    case SequenceKind::fibonacci:
        return "fibonacci";
    case SequenceKind::gaussian:
        return "gaussian:" + std::to_string(param_);
    case SequenceKind::constant:
        return "constant:" + std::to_string(param_);
    case SequenceKind::custom: {
        std::string out = "custom:";
        for (std::size_t i = 0; i < custom_.size(); ++i) {
            if (i) out += ',';
            out += custom_[i].get_str();
        }
        return out;
    }
    }
    return {};
}

Integer f_term(const FSequence& seq, int k) { return seq.term(k); }

Integer cumulative_sum(const FSequence& seq, int n)
{
    if (n < 0) throw IndexOutOfRange("negative index for S(n)");
    Integer sum = 0;
    for (int k = 1; k <= n; ++k) sum += seq.term(k);
    return sum;
}

FSequence make_sequence(std::string_view descriptor)
{
    if (descriptor == "naturals") return FSequence::naturals();
    if (descriptor == "fibonacci") return FSequence::fibonacci();

    auto colon = descriptor.find(':');
    if (colon == std::string_view::npos)
        throw InvalidParameter("unknown sequence '" + std::string(descriptor) + "'");
    std::string_view head = descriptor.substr(0, colon);
    std::string_view body = descriptor.substr(colon + 1);

    if (head == "gaussian") return FSequence::gaussian(parse_unsigned(body, "q"));
    if (head == "constant") return FSequence::constant(parse_unsigned(body, "constant"));
    if (head == "custom") {
        std::vector<Integer> terms;
        std::size_t start = 0;
        while (true) {
            auto comma = body.find(',', start);
            std::string_view item = body.substr(start, comma == std::string_view::npos
                                                           ? std::string_view::npos
                                                           : comma - start);
            if (item.empty() || item.find_first_not_of("0123456789") != std::string_view::npos)
                throw InvalidParameter("invalid custom term '" + std::string(item) + "'");
            terms.emplace_back(std::string(item));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        return FSequence::custom(std::move(terms));
    }
    throw InvalidParameter("unknown sequence '" + std::string(descriptor) + "'");
}

} // namespace cobweb
