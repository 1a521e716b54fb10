#pragma once

// Book documents: a tree is null or
//   {"left": <tree>, "entry": {"name": s, "contact": {"phone": s} | {"skype": s}}, "right": <tree>}

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "contacts/book.hpp"

namespace contacts {

/// A document that is not valid JSON or not a book. `where` is
/// "line L, column C" for syntax errors and a JSON pointer for shape errors.
class BookFormatError : public std::runtime_error {
public:
    BookFormatError(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(std::move(where))
    {
    }

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

namespace detail {

inline std::string pointer(const std::string& path)
{
    return path.empty() ? "/" : path;
}

inline const std::string& string_field(const nlohmann::json& j, const std::string& key,
                                       const std::string& path)
{
    const auto it = j.find(key);
    if (it == j.end()) throw BookFormatError(pointer(path), "missing \"" + key + "\"");
    if (!it->is_string()) throw BookFormatError(path + "/" + key, "expected a string");
    return it->get_ref<const std::string&>();
}

inline void only_keys(const nlohmann::json& j, std::initializer_list<const char*> keys,
                      const std::string& path)
{
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* k : keys) known = known || key == k;
        if (!known) throw BookFormatError(path + "/" + key, "unexpected key \"" + key + "\"");
    }
}

inline Contact contact_from_json(const nlohmann::json& j, const std::string& path)
{
    if (!j.is_object()) throw BookFormatError(pointer(path), "expected a contact object");
    const bool has_phone = j.contains("phone");
    const bool has_skype = j.contains("skype");
    if (has_phone == has_skype || j.size() != 1) {
        throw BookFormatError(pointer(path), "contact needs exactly one of \"phone\" or \"skype\"");
    }
    if (has_phone) return Phone{string_field(j, "phone", path)};
    return Skype{string_field(j, "skype", path)};
}

inline Entry entry_from_json(const nlohmann::json& j, const std::string& path)
{
    if (!j.is_object()) throw BookFormatError(pointer(path), "expected an entry object");
    only_keys(j, {"name", "contact"}, path);
    std::string name = string_field(j, "name", path);
    if (name.empty()) throw BookFormatError(path + "/name", "name is empty");
    const auto it = j.find("contact");
    if (it == j.end()) throw BookFormatError(pointer(path), "missing \"contact\"");
    return Entry{std::move(name), contact_from_json(*it, path + "/contact")};
}

inline Book book_from_json(const nlohmann::json& j, const std::string& path)
{
    if (j.is_null()) return Book();
    if (!j.is_object()) throw BookFormatError(pointer(path), "expected null or a node object");
    only_keys(j, {"left", "entry", "right"}, path);
    for (const char* key : {"left", "entry", "right"}) {
        if (!j.contains(key)) throw BookFormatError(pointer(path), std::string("missing \"") + key + "\"");
    }
    Book l = book_from_json(j.at("left"), path + "/left");
    Entry e = entry_from_json(j.at("entry"), path + "/entry");
    return Book::node(std::move(l), std::move(e), book_from_json(j.at("right"), path + "/right"));
}

}  // namespace detail

inline Book parse_book(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // Recover the line and column of the byte offset nlohmann reports.
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t end = std::min(text.size(), e.byte == 0 ? 0 : e.byte - 1);
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw BookFormatError("line " + std::to_string(line) + ", column " + std::to_string(column),
                              "invalid JSON");
    }
    return detail::book_from_json(j, "");
}

inline nlohmann::ordered_json contact_to_json(const Contact& c)
{
    if (const auto* p = std::get_if<Phone>(&c)) return {{"phone", p->number}};
    return {{"skype", std::get<Skype>(c).id}};
}

inline nlohmann::ordered_json book_to_json(const Book& b)
{
    if (b.empty()) return nullptr;
    nlohmann::ordered_json j;
    j["left"] = book_to_json(b.left());
    j["entry"] = {{"name", b.label().name}, {"contact", contact_to_json(b.label().contact)}};
    j["right"] = book_to_json(b.right());
    return j;
}

/// Two-space indentation, keys in the order left, entry, right, trailing newline.
inline std::string serialize_book(const Book& b)
{
    return book_to_json(b).dump(2) + "\n";
}

}  // namespace contacts
