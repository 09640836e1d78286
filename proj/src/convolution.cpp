#include "lexdense/errors.hpp"
#include "lexdense/nfa.hpp"

namespace lexdense {

ConvolutionAlphabet::ConvolutionAlphabet(OrderedAlphabet base, std::size_t tracks)
    : base_(std::move(base)), tracks_(tracks), radix_(base_.size() + 1) {
  if (tracks_ == 0) throw InputError("a convolution needs at least one track");
  std::size_t total = 1;
  for (std::size_t t = 0; t < tracks_; ++t) {
    total *= radix_;
    if (total > (std::size_t{1} << 31)) throw ResourceLimitError("convolution alphabet too large");
  }
  size_ = total - 1;  // the all-pad tuple is the largest index
}

std::vector<std::size_t> ConvolutionAlphabet::components(Letter letter) const {
  std::vector<std::size_t> out(tracks_);
  std::size_t rest = letter;
  for (std::size_t t = tracks_; t-- > 0;) {
    out[t] = rest % radix_;
    rest /= radix_;
  }
  return out;
}

std::size_t ConvolutionAlphabet::component(Letter letter, std::size_t track) const {
  std::size_t rest = letter;
  for (std::size_t t = tracks_ - 1; t > track; --t) rest /= radix_;
  return rest % radix_;
}

Letter ConvolutionAlphabet::letter(std::span<const std::size_t> comps) const {
  if (comps.size() != tracks_) throw InputError("wrong number of track components");
  std::size_t index = 0;
  for (auto c : comps) {
    if (c >= radix_) throw InputError("track component out of range");
    index = index * radix_ + c;
  }
  if (index >= size_) throw InputError("the all-pad tuple is not a letter");
  return static_cast<Letter>(index);
}

std::string ConvolutionAlphabet::name(Letter letter) const {
  if (tracks_ == 1) return base_.token(letter);
  std::string out = "(";
  auto comps = components(letter);
  for (std::size_t t = 0; t < tracks_; ++t) {
    if (t) out += ",";
    out += comps[t] == pad() ? std::string("⊥") : base_.token(comps[t]);
  }
  return out + ")";
}

std::vector<Letter> ConvolutionAlphabet::convolve(std::span<const Word> words) const {
  if (words.size() != tracks_) throw InputError("convolve: expected one word per track");
  std::vector<PackedWord> packed;
  std::size_t length = 0;
  for (const auto& w : words) {
    packed.push_back(base_.pack(w));
    length = std::max(length, w.size());
  }
  std::vector<Letter> out;
  out.reserve(length);
  std::vector<std::size_t> comps(tracks_);
  for (std::size_t i = 0; i < length; ++i) {
    for (std::size_t t = 0; t < tracks_; ++t) comps[t] = i < packed[t].size() ? letter_rank(packed[t][i]) : pad();
    out.push_back(letter(comps));
  }
  return out;
}

std::vector<Word> ConvolutionAlphabet::split(std::span<const Letter> letters) const {
  std::vector<Word> out(tracks_);
  std::vector<bool> ended(tracks_, false);
  for (auto l : letters) {
    if (l >= size_) throw InputError("letter index out of range");
    auto comps = components(l);
    for (std::size_t t = 0; t < tracks_; ++t) {
      if (comps[t] == pad()) {
        ended[t] = true;
      } else if (ended[t]) {
        throw InputError("malformed convolution: letter after pad on track " + std::to_string(t));
      } else {
        out[t].push_back(base_.token(comps[t]));
      }
    }
  }
  return out;
}

}  // namespace lexdense
