#pragma once

// A contact book as a tree of entries, and the optics that reach into it.

#include <cctype>
#include <string>
#include <variant>
#include <vector>

#include "optics/applicative.hpp"
#include "optics/optic.hpp"
#include "optics/tree.hpp"

namespace contacts {

using optics::Integer;

using Number = std::string;
using Id = std::string;

struct Phone {
    Number number;
    friend bool operator==(const Phone&, const Phone&) = default;
};

struct Skype {
    Id id;
    friend bool operator==(const Skype&, const Skype&) = default;
};

using Contact = std::variant<Phone, Skype>;

struct Entry {
    std::string name;
    Contact contact;
    friend bool operator==(const Entry&, const Entry&) = default;
};

using Book = optics::Tree<Entry>;

/// The number inside a Phone contact; Skype contacts are left alone.
inline auto phone()
{
    using Match = optics::Sum<Contact, Number>;
    return optics::prism_c2p(optics::Prism<Number, Number, Contact, Contact>{
        [](const Contact& c) {
            if (const auto* p = std::get_if<Phone>(&c)) return Match::right(p->number);
            return Match::left(c);
        },
        [](const Number& n) { return Contact(Phone{n}); }});
}

/// The contact field of an entry.
inline auto contact()
{
    return optics::lens_c2p(optics::Lens<Contact, Contact, Entry, Entry>{
        [](const Entry& e) { return e.contact; },
        [](const optics::Pair<Contact, Entry>& p) { return Entry{p.second.name, p.first}; }});
}

/// Every phone number in the book, in in-order entry order.
inline auto book_phones()
{
    return optics::compose(optics::compose(phone(), contact()),
                           optics::inorder_p<Entry, Entry>());
}

/// Keeps the digits, and a '+' when it is the first non-blank character.
/// Ten digits without '+' are laid out as "(AAA) BBB-CCCC".
inline Number tidy_number(const Number& n)
{
    Number digits;
    bool plus = false;
    bool seen_nonblank = false;
    for (char c : n) {
        const auto u = static_cast<unsigned char>(c);
        if (!seen_nonblank && !std::isspace(u)) {
            seen_nonblank = true;
            plus = c == '+';
        }
        if (std::isdigit(u)) digits += c;
    }
    if (plus) return "+" + digits;
    if (digits.size() == 10) {
        return "(" + digits.substr(0, 3) + ") " + digits.substr(3, 3) + "-" + digits.substr(6);
    }
    return digits;
}

inline Book tidy_book(const Book& b)
{
    return optics::over(book_phones(), tidy_number)(b);
}

using PhoneList = std::vector<Number>;

/// getConst . traverseOf bookPhones (\x -> Const [x])
inline PhoneList list_book_phones(const Book& b)
{
    using C = optics::ConstApplicative<PhoneList>;
    return optics::traverse_of<C>(book_phones(), [](const Number& n) {
        return optics::Const<PhoneList, Number>{{n}};
    })(b).value;
}

/// traverseOf bookPhones output, with the output sink as the effect: the
/// book comes back unchanged alongside the emitted lines.
inline optics::Writer<std::vector<std::string>, Book> print_book(const Book& b)
{
    return optics::traverse_of<optics::LineSink>(book_phones(), [](const Number& n) {
        return optics::Writer<std::vector<std::string>, Number>{n, {n}};
    })(b);
}

inline Integer digit_sum(const Number& n)
{
    Integer sum = 0;
    for (char c : n) {
        if (std::isdigit(static_cast<unsigned char>(c))) sum += c - '0';
    }
    return sum;
}

/// Counts phone entries whose digit sum is odd, threading the count through
/// a stateful traversal.
inline Integer count_odd_phones(const Book& b)
{
    using S = optics::StateApplicative<Integer>;
    auto visit = [](const Number& n) -> optics::State<Integer, Number> {
        const bool odd = digit_sum(n) % 2 != 0;
        return {[n, odd](Integer k) { return optics::Pair<Number, Integer>{n, k + (odd ? 1 : 0)}; }};
    };
    return optics::traverse_of<S>(book_phones(), visit)(b).run(0).second;
}

}  // namespace contacts
