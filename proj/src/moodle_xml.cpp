#include "qbank/moodle_xml.hpp"

#include "qbank/error.hpp"
#include "qbank/text.hpp"

#include <expat.h>

#include <algorithm>
#include <charconv>
#include <climits>
#include <memory>
#include <optional>

namespace qbank {

namespace {

// ---------------------------------------------------------------------------
// Writing

// Accepts well-formed UTF-8 restricted to the XML 1.0 Char production.
bool is_xml_text(std::string_view text)
{
  const auto* p = reinterpret_cast<const unsigned char*>(text.data());
  const auto* end = p + text.size();
  while (p < end) {
    unsigned char c = *p;
    std::uint32_t cp = 0;
    int extra = 0;
    if (c < 0x80) {
      cp = c;
    } else if ((c & 0xE0) == 0xC0) {
      cp = c & 0x1F;
      extra = 1;
    } else if ((c & 0xF0) == 0xE0) {
      cp = c & 0x0F;
      extra = 2;
    } else if ((c & 0xF8) == 0xF0) {
      cp = c & 0x07;
      extra = 3;
    } else {
      return false;
    }
    if (end - p < extra + 1) {
      return false;
    }
    for (int i = 1; i <= extra; ++i) {
      if ((p[i] & 0xC0) != 0x80) {
        return false;
      }
      cp = (cp << 6) | (p[i] & 0x3F);
    }
    static constexpr std::uint32_t min_for_length[] = {0, 0x80, 0x800, 0x10000};
    if (cp < min_for_length[extra]) {
      return false; // overlong
    }
    bool allowed = cp == 0x9 || cp == 0xA || cp == 0xD || (cp >= 0x20 && cp <= 0xD7FF)
                   || (cp >= 0xE000 && cp <= 0xFFFD) || (cp >= 0x10000 && cp <= 0x10FFFF);
    if (!allowed) {
      return false;
    }
    p += extra + 1;
  }
  return true;
}

std::string describe(const Question& question, std::size_t index)
{
  std::string label = question.name.empty() ? "Q" + std::to_string(index + 1) : question.name;
  return "question " + std::to_string(index + 1) + " (\"" + label + "\")";
}

class Writer
{
public:
  void line(int depth, std::string_view text)
  {
    m_out.append(static_cast<std::size_t>(depth) * 2, ' ');
    m_out += text;
    m_out += '\n';
  }

  // <tag><text>escaped</text></tag> across three lines.
  void plain_text_block(int depth, std::string_view tag, std::string_view text)
  {
    line(depth, "<" + std::string(tag) + ">");
    line(depth + 1, "<text>" + html_escape(text) + "</text>");
    line(depth, "</" + std::string(tag) + ">");
  }

  void html_text_block(int depth, std::string_view tag, std::string_view text)
  {
    line(depth, "<" + std::string(tag) + " format=\"html\">");
    line(depth + 1, "<text>" + escape_for_cdata(text) + "</text>");
    line(depth, "</" + std::string(tag) + ">");
  }

  std::string take() { return std::move(m_out); }

private:
  std::string m_out;
};

void write_question(Writer& w, const Question& question)
{
  w.line(1, "<question type=\"" + std::string(xml_type_name(question.kind())) + "\">");
  w.plain_text_block(2, "name", question.name);
  w.html_text_block(2, "questiontext", question.stem);
  w.line(2, "<defaultgrade>1</defaultgrade>");

  std::visit(
    [&w](const auto& payload) {
      using T = std::decay_t<decltype(payload)>;
      if constexpr (std::is_same_v<T, ChoiceSet>) {
        w.line(2, "<single>true</single>");
        w.line(2, "<shuffleanswers>true</shuffleanswers>");
        w.line(2, "<answernumbering>none</answernumbering>");
        for (const auto& choice : payload.choices) {
          w.line(2, "<answer fraction=\"" + format_fraction(choice.fraction) + "\" format=\"html\">");
          w.line(3, "<text>" + escape_for_cdata(choice.text) + "</text>");
          w.line(2, "</answer>");
        }
      } else if constexpr (std::is_same_v<T, NumericalAnswerSet>) {
        for (double answer : payload.answers) {
          w.line(2, "<answer fraction=\"100\">");
          w.line(3, "<text>" + format_number(answer) + "</text>");
          w.line(3, "<tolerance>" + format_number(payload.tolerance) + "</tolerance>");
          w.line(2, "</answer>");
        }
      } else if constexpr (std::is_same_v<T, ShortAnswerSet>) {
        w.line(2, "<usecase>0</usecase>");
        for (const auto& answer : payload.answers) {
          w.line(2, "<answer fraction=\"100\" format=\"html\">");
          w.line(3, "<text>" + escape_for_cdata(answer) + "</text>");
          w.line(2, "</answer>");
        }
      } else if constexpr (std::is_same_v<T, MatchPairList>) {
        w.line(2, "<shuffleanswers>true</shuffleanswers>");
        for (const auto& pair : payload.pairs) {
          w.line(2, "<subquestion format=\"html\">");
          w.line(3, "<text>" + escape_for_cdata(pair.prompt) + "</text>");
          w.line(3, "<answer>");
          w.line(4, "<text>" + escape_for_cdata(pair.match) + "</text>");
          w.line(3, "</answer>");
          w.line(2, "</subquestion>");
        }
      }
    },
    question.payload);
  w.line(1, "</question>");
}

void write_category(Writer& w, std::string_view path)
{
  std::string full(kCourseCategoryRoot);
  if (!path.empty()) {
    full += "/";
    full += path;
  }
  w.line(1, "<question type=\"category\">");
  w.plain_text_block(2, "category", full);
  w.line(1, "</question>");
}

// ---------------------------------------------------------------------------
// Reading

struct Element
{
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<std::unique_ptr<Element>> children;
  std::string text; // character data directly inside this element
  std::size_t line = 0;

  const Element* child(std::string_view tag) const
  {
    for (const auto& c : children) {
      if (c->name == tag) {
        return c.get();
      }
    }
    return nullptr;
  }

  std::vector<const Element*> all(std::string_view tag) const
  {
    std::vector<const Element*> out;
    for (const auto& c : children) {
      if (c->name == tag) {
        out.push_back(c.get());
      }
    }
    return out;
  }

  std::optional<std::string> attribute(std::string_view key) const
  {
    for (const auto& [k, v] : attributes) {
      if (k == key) {
        return v;
      }
    }
    return std::nullopt;
  }

  // Text of the nested <text> element, or of this element when it has none.
  std::string text_value() const
  {
    const Element* t = child("text");
    return t != nullptr ? t->text : text;
  }
};

struct TreeBuilder
{
  XML_Parser parser = nullptr;
  std::unique_ptr<Element> root;
  std::vector<Element*> stack;

  static void on_start(void* data, const XML_Char* name, const XML_Char** attributes)
  {
    auto* self = static_cast<TreeBuilder*>(data);
    auto element = std::make_unique<Element>();
    element->name = name;
    element->line = XML_GetCurrentLineNumber(self->parser);
    for (const XML_Char** a = attributes; *a != nullptr; a += 2) {
      element->attributes.emplace_back(a[0], a[1]);
    }
    Element* raw = element.get();
    if (self->stack.empty()) {
      self->root = std::move(element);
    } else {
      self->stack.back()->children.push_back(std::move(element));
    }
    self->stack.push_back(raw);
  }

  static void on_end(void* data, const XML_Char*)
  {
    static_cast<TreeBuilder*>(data)->stack.pop_back();
  }

  static void on_text(void* data, const XML_Char* text, int length)
  {
    auto* self = static_cast<TreeBuilder*>(data);
    if (!self->stack.empty()) {
      self->stack.back()->text.append(text, static_cast<std::size_t>(length));
    }
  }
};

std::unique_ptr<Element> parse_tree(std::string_view xml)
{
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> parser(XML_ParserCreate(nullptr),
                                                                                       &XML_ParserFree);
  if (!parser) {
    throw Error("cannot create XML parser");
  }
  TreeBuilder builder;
  builder.parser = parser.get();
  XML_SetUserData(parser.get(), &builder);
  XML_SetElementHandler(parser.get(), &TreeBuilder::on_start, &TreeBuilder::on_end);
  XML_SetCharacterDataHandler(parser.get(), &TreeBuilder::on_text);

  constexpr std::size_t chunk = 1 << 20;
  std::size_t offset = 0;
  do {
    std::size_t n = std::min(chunk, xml.size() - offset);
    bool last = offset + n == xml.size();
    if (XML_Parse(parser.get(), xml.data() + offset, static_cast<int>(n), last ? 1 : 0) == XML_STATUS_ERROR) {
      throw ParseError(XML_ErrorString(XML_GetErrorCode(parser.get())), XML_GetCurrentLineNumber(parser.get()),
                       XML_GetCurrentColumnNumber(parser.get()) + 1);
    }
    offset += n;
  } while (offset < xml.size());
  return std::move(builder.root);
}

double parse_double(const std::string& text, std::string_view what)
{
  std::string_view t = trim(text);
  double value = 0.0;
  auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || end != t.data() + t.size()) {
    throw ValidationError(std::string(what) + " \"" + text + "\" is not a number");
  }
  return value;
}

double fraction_of(const Element& answer)
{
  auto fraction = answer.attribute("fraction");
  return fraction ? parse_double(*fraction, "fraction") : 0.0;
}

void require_full_credit(const Element& answer)
{
  if (fraction_of(answer) != kCorrectFraction) {
    throw ValidationError("only fully correct answers are supported");
  }
}

Payload read_payload(const Element& element, std::string_view type)
{
  if (type == "multichoice") {
    ChoiceSet set;
    if (const Element* single = element.child("single")) {
      std::string_view v = trim(single->text);
      set.single_answer = v == "true" || v == "1";
    }
    if (!set.single_answer) {
      throw ValidationError("multiple-answer questions are not supported");
    }
    for (const Element* answer : element.all("answer")) {
      set.choices.push_back(Choice{answer->text_value(), fraction_of(*answer)});
    }
    return set;
  }
  if (type == "numerical") {
    NumericalAnswerSet set;
    std::optional<double> tolerance;
    for (const Element* answer : element.all("answer")) {
      require_full_credit(*answer);
      set.answers.push_back(parse_double(answer->text_value(), "numerical answer"));
      double t = 0.0;
      if (const Element* tol = answer->child("tolerance")) {
        t = parse_double(tol->text, "tolerance");
      }
      if (tolerance && *tolerance != t) {
        throw ValidationError("answers with different tolerances are not supported");
      }
      tolerance = t;
    }
    set.tolerance = tolerance.value_or(0.0);
    return set;
  }
  if (type == "shortanswer") {
    ShortAnswerSet set;
    for (const Element* answer : element.all("answer")) {
      require_full_credit(*answer);
      set.answers.push_back(answer->text_value());
    }
    return set;
  }
  MatchPairList list;
  for (const Element* sub : element.all("subquestion")) {
    const Element* answer = sub->child("answer");
    list.pairs.push_back(MatchPair{sub->text_value(), answer != nullptr ? answer->text_value() : std::string()});
  }
  return list;
}

std::string category_from_xml(std::string_view full)
{
  full = trim(full);
  for (std::string_view prefix : {kCourseCategoryRoot, std::string_view("$course$")}) {
    if (full == prefix) {
      return {};
    }
    if (full.size() > prefix.size() && full.substr(0, prefix.size()) == prefix && full[prefix.size()] == '/') {
      return std::string(full.substr(prefix.size() + 1));
    }
  }
  return std::string(full);
}

bool is_supported(std::string_view type)
{
  return type == "multichoice" || type == "numerical" || type == "shortanswer" || type == "matching";
}

} // namespace

std::string escape_for_cdata(std::string_view text)
{
  std::string out = "<![CDATA[";
  std::size_t start = 0;
  for (std::size_t pos = text.find("]]>"); pos != std::string_view::npos; pos = text.find("]]>", start)) {
    // End the section between "]]" and ">" so neither half closes it early.
    out.append(text.substr(start, pos + 2 - start));
    out += "]]><![CDATA[";
    start = pos + 2;
  }
  out.append(text.substr(start));
  out += "]]>";
  return out;
}

std::string serialize_bank(const BankContent& content)
{
  for (std::size_t i = 0; i < content.questions.size(); ++i) {
    const Question& q = content.questions[i];
    bool ok = is_xml_text(q.category);
    Question copy = q;
    for_each_text(copy, [&ok](std::string& text) { ok = ok && is_xml_text(text); });
    if (!ok) {
      throw EncodeError(describe(q, i) + " contains text that is not valid UTF-8 XML character data");
    }
  }
  for (const auto& mark : content.categories) {
    if (!is_xml_text(mark.path)) {
      throw EncodeError("category \"" + mark.path + "\" is not valid UTF-8 XML character data");
    }
  }

  Writer w;
  w.line(0, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
  w.line(0, "<quiz>");
  auto mark = content.categories.begin();
  for (std::size_t i = 0; i <= content.questions.size(); ++i) {
    while (mark != content.categories.end() && mark->position == i) {
      write_category(w, mark->path);
      ++mark;
    }
    if (i < content.questions.size()) {
      write_question(w, content.questions[i]);
    }
  }
  w.line(0, "</quiz>");
  return w.take();
}

std::string serialize_bank(const QuestionBank& bank)
{
  return serialize_bank(bank.content());
}

QuestionBank parse_bank(std::string_view xml, WarningSink sink)
{
  auto root = parse_tree(xml);
  if (!root || root->name != "quiz") {
    throw ParseError("root element must be <quiz>, found <" + (root ? root->name : std::string()) + ">",
                     root ? root->line : 1, 1);
  }

  QuestionBank bank(std::filesystem::path{}, std::nullopt, EnvOverrides::ignore);
  bank.set_warning_sink(std::move(sink));
  std::size_t ordinal = 0;
  for (const auto& child : root->children) {
    if (child->name != "question") {
      continue;
    }
    ++ordinal;
    std::string type = child->attribute("type").value_or("");
    std::string where = "question " + std::to_string(ordinal) + " (line " + std::to_string(child->line) + ")";
    if (type == "category") {
      const Element* category = child->child("category");
      std::string path = category_from_xml(category != nullptr ? category->text_value() : std::string());
      try {
        bank.set_category(path);
      } catch (const ValidationError& e) {
        bank.warn(where + ": category skipped: " + e.what());
      }
      continue;
    }
    if (!is_supported(type)) {
      bank.warn(where + ": unsupported question type \"" + type + "\" skipped");
      continue;
    }
    try {
      Question question;
      if (const Element* name = child->child("name")) {
        question.name = name->text_value();
      }
      if (const Element* text = child->child("questiontext")) {
        question.stem = text->text_value();
      }
      question.payload = read_payload(*child, type);
      bank.append(std::move(question));
    } catch (const ValidationError& e) {
      bank.warn(where + ": " + type + " question skipped: " + e.what());
    }
  }
  return bank;
}

} // namespace qbank
