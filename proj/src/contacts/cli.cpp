#include "contacts/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "contacts/book.hpp"
#include "contacts/json_io.hpp"

namespace contacts {

namespace {

struct ReadFailure {
    std::string message;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ReadFailure{"cannot read " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw ReadFailure{"cannot read " + path};
    return buf.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Tidy, list and print the phone numbers of a contact book"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Accepted for uniformity; the tool uses no randomness");

    std::string input;
    std::string output;
    auto* tidy = app.add_subcommand("tidy", "Normalize every phone number");
    tidy->add_option("input", input, "Book file")->required();
    tidy->add_option("-o,--output", output, "Write here instead of standard output");
    auto* list = app.add_subcommand("list", "Print the phone numbers, in order");
    list->add_option("input", input, "Book file")->required();
    auto* print = app.add_subcommand("print", "Print the numbers, then the book");
    print->add_option("input", input, "Book file")->required();
    auto* count = app.add_subcommand("count-odd", "Count phone numbers with an odd digit sum");
    count->add_option("input", input, "Book file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "contacts: " << e.what() << '\n' << app.help();
        return exit_usage;
    }

    Book book;
    try {
        book = parse_book(read_file(input));
    } catch (const ReadFailure& e) {
        err << "contacts: " << e.message << '\n';
        return exit_unreadable;
    } catch (const BookFormatError& e) {
        err << "contacts: " << input << ": malformed book at " << e.what() << '\n';
        return exit_malformed;
    }

    if (*tidy) {
        const std::string text = serialize_book(tidy_book(book));
        if (output.empty()) {
            out << text;
            return exit_ok;
        }
        std::ofstream file(output, std::ios::binary);
        file << text;
        if (!file.flush()) {
            err << "contacts: cannot write " << output << '\n';
            return exit_unreadable;
        }
    } else if (*list) {
        for (const auto& n : list_book_phones(book)) out << n << '\n';
    } else if (*print) {
        const auto result = print_book(book);
        for (const auto& line : result.log) out << line << '\n';
        out << serialize_book(result.value);
    } else if (*count) {
        out << count_odd_phones(book) << '\n';
    }
    return exit_ok;
}

}  // namespace contacts
