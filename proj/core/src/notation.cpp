#include "skeinlab/notation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "skeinlab/errors.hpp"

namespace skeinlab {

namespace {

std::string stripSpace(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string text) : text_(std::move(text)) {}
  bool done() const { return at_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[at_]; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++at_;
    return true;
  }
  void expect(char c) {
    if (!eat(c))
      throw MalformedToken(std::string("expected '") + c + "' at offset " + std::to_string(at_));
  }
  long integer() {
    std::size_t start = at_;
    if (peek() == '-' || peek() == '+') ++at_;
    std::size_t digits = at_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[at_]))) ++at_;
    if (at_ == digits) throw MalformedToken("expected an integer at offset " + std::to_string(start));
    return std::stol(text_.substr(start, at_ - start));
  }

 private:
  std::string text_;
  std::size_t at_ = 0;
};

}  // namespace

Diagram parsePd(const std::string& text) {
  Cursor cur(stripSpace(text));
  std::vector<PDCrossing> crossings;
  long freeLoops = 0;
  bool first = true;
  while (!cur.done()) {
    if (!first) cur.expect(';');
    first = false;
    if (cur.eat('X')) {
      cur.expect('[');
      PDCrossing c;
      for (int p = 0; p < 4; ++p) {
        if (p > 0) cur.expect(',');
        const long v = cur.integer();
        if (v < 1) throw MalformedToken("arc labels must be positive integers");
        c.arcs[p] = static_cast<int>(v);
      }
      cur.expect(']');
      crossings.push_back(c);
    } else if (cur.eat('O')) {
      cur.expect('*');
      const long k = cur.integer();
      if (k < 0) throw MalformedToken("free-loop count must be nonnegative");
      freeLoops += k;
    } else {
      throw MalformedToken("expected 'X[...]' or 'O*k' term");
    }
  }
  if (first) throw MalformedToken("empty diagram text");
  return Diagram::make(std::move(crossings), freeLoops, true);
}

BraidWord parseBraidWord(const std::string& text) {
  const std::string stripped = text;
  if (stripped.rfind("braid:", 0) != 0) throw MalformedToken("braid text must start with 'braid:'");
  std::istringstream in(stripped.substr(6));
  std::string head;
  if (!std::getline(in, head, '|')) throw MalformedToken("missing '|' in braid text");
  BraidWord w;
  try {
    std::size_t used = 0;
    w.strandCount = std::stoi(stripSpace(head), &used);
    if (used != stripSpace(head).size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw MalformedToken("bad strand count in braid text");
  }
  if (w.strandCount < 1) throw MalformedToken("strand count must be positive");
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("");
      w.letters.push_back(v);
    } catch (const std::exception&) {
      throw MalformedToken("bad braid letter '" + tok + "'");
    }
  }
  if (w.letters.empty()) throw MalformedToken("braid word must contain at least one letter");
  for (int v : w.letters) {
    if (v == 0 || std::abs(v) > w.strandCount - 1)
      throw GeneratorOutOfRange("braid letter " + std::to_string(v) + " outside [1," +
                                std::to_string(w.strandCount - 1) + "]");
  }
  return w;
}

Diagram parseBraid(const std::string& text) {
  const BraidWord w = parseBraidWord(text);
  const int n = w.strandCount;

  std::vector<int> init(n), cur(n);
  int nextLabel = 1;
  for (int j = 0; j < n; ++j) init[j] = cur[j] = nextLabel++;

  std::vector<PDCrossing> crossings;
  for (int letter : w.letters) {
    const int i = std::abs(letter) - 1;  // crossing between strands i, i+1
    const int left = cur[i], right = cur[i + 1];
    const int topLeft = nextLabel++;
    const int topRight = nextLabel++;
    if (letter > 0) {
      // left strand passes over: under-in is the incoming right strand
      crossings.push_back({{right, topRight, topLeft, left}, 3});
    } else {
      crossings.push_back({{left, right, topRight, topLeft}, 1});
    }
    cur[i] = topLeft;
    cur[i + 1] = topRight;
  }

  // trace closure: the top of each strand rejoins its bottom
  long freeLoops = 0;
  std::map<int, int> rename;
  for (int j = 0; j < n; ++j) {
    if (cur[j] == init[j]) {
      ++freeLoops;  // strand untouched by any crossing
    } else {
      rename[cur[j]] = init[j];
    }
  }
  for (auto& c : crossings)
    for (int p = 0; p < 4; ++p) {
      auto it = rename.find(c.arcs[p]);
      if (it != rename.end()) c.arcs[p] = it->second;
    }
  return Diagram::make(std::move(crossings), freeLoops, true);
}

Diagram parseNotation(const std::string& text) {
  const std::string stripped = stripSpace(text);
  if (stripped.rfind("braid:", 0) == 0) return parseBraid(text);
  return parsePd(text);
}

std::string serializeDiagram(const Diagram& d) {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : d.crossings()) {
    if (!first) os << ";";
    first = false;
    os << "X[" << c.arcs[0] << "," << c.arcs[1] << "," << c.arcs[2] << "," << c.arcs[3] << "]";
  }
  if (d.freeLoops() > 0) {
    if (!first) os << ";";
    first = false;
    os << "O*" << d.freeLoops();
  }
  if (first) os << "O*0";
  return os.str();
}

}  // namespace skeinlab
