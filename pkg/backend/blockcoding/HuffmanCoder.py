import functools
import heapq

from backend.core.BroadcastError import BroadcastError

CHUNK_LENGTH = 12


def build_code_lengths(weights):
    """Huffman code lengths for symbols 0..len(weights)-1; zero-weight symbols get no code.

    A lone symbol gets length 0: both sides already know it.
    """
    heap = [(weight, symbol, None) for symbol, weight in enumerate(weights) if weight > 0]
    lengths = [0] * len(weights)
    if len(heap) <= 1:
        return lengths
    heapq.heapify(heap)

    # Ties in weight are broken by the smallest symbol in each subtree.
    while len(heap) > 1:
        weight_one, tag_one, node_one = heapq.heappop(heap)
        weight_two, tag_two, node_two = heapq.heappop(heap)
        merged = ((tag_one, node_one), (tag_two, node_two))
        heapq.heappush(heap, (weight_one + weight_two, min(tag_one, tag_two), merged))

    pending = [(heap[0][1], heap[0][2], 0)]
    while pending:
        symbol, children, depth = pending.pop()
        if children is None:
            lengths[symbol] = depth
            continue
        for child_symbol, grandchildren in children:
            pending.append((child_symbol, grandchildren, depth + 1))
    return lengths


def build_canonical_codes(lengths):
    """Canonical prefix codes {symbol: (code, length)} for the given lengths."""
    items = sorted((length, symbol) for symbol, length in enumerate(lengths) if length > 0)
    codes = {}
    code = 0
    previous_length = 0
    for length, symbol in items:
        code <<= (length - previous_length)
        codes[symbol] = (code, length)
        code += 1
        previous_length = length
    return codes


class HuffmanCoder:
    """Canonical Huffman code over symbols 0..K-1 built from symbol weights.

    Encoded streams are strings of '0'/'1' characters.
    """

    def __init__(self, weights):
        self._weights = tuple(weights)
        self._lengths = build_code_lengths(self._weights)
        self._codes = build_canonical_codes(self._lengths)
        self._decode_table = {(length, code): symbol for symbol, (code, length) in self._codes.items()}
        present = [symbol for symbol, weight in enumerate(self._weights) if weight > 0]
        self._only_symbol = present[0] if len(present) == 1 else None

    @classmethod
    def for_bernoulli_chunks(cls, p, chunk_length):
        """Code for chunks of `chunk_length` i.i.d. Bernoulli(p) bits, chunk value read MSB first."""
        return _bernoulli_coder(float(p), int(chunk_length))

    def lengths(self):
        return tuple(self._lengths)

    def code_length(self, symbol):
        if self._only_symbol is not None and symbol == self._only_symbol:
            return 0
        if symbol not in self._codes:
            raise BroadcastError("Symbol %r has no codeword." % (symbol,))
        return self._codes[symbol][1]

    def expected_length(self):
        total = sum(self._weights)
        return sum(w * l for w, l in zip(self._weights, self._lengths)) / total

    def encode(self, symbols):
        if self._only_symbol is not None:
            for symbol in symbols:
                if symbol != self._only_symbol:
                    raise BroadcastError("Symbol %r has no codeword." % (symbol,))
            return ""
        parts = []
        for symbol in symbols:
            if symbol not in self._codes:
                raise BroadcastError("Symbol %r has no codeword." % (symbol,))
            code, length = self._codes[symbol]
            parts.append(format(code, "0%db" % length))
        return "".join(parts)

    def decode(self, bits, count):
        """Decode exactly `count` symbols from a bit string."""
        if self._only_symbol is not None:
            return [self._only_symbol] * count
        symbols = []
        code = 0
        length = 0
        for bit in bits:
            code = (code << 1) | (bit == "1")
            length += 1
            symbol = self._decode_table.get((length, code))
            if symbol is not None:
                symbols.append(symbol)
                code = 0
                length = 0
        if length or len(symbols) != count:
            raise BroadcastError("Bit stream does not decode to %d symbols." % count)
        return symbols


@functools.lru_cache(maxsize=256)
def _bernoulli_coder(p, chunk_length):
    weights = []
    for value in range(2 ** chunk_length):
        ones = bin(value).count("1")
        weights.append(p ** ones * (1.0 - p) ** (chunk_length - ones))
    return HuffmanCoder(weights)


def bits_to_chunks(bits, chunk_length=CHUNK_LENGTH):
    """Split a 0/1 sequence into integer chunks (MSB first); the last chunk may be shorter.

    Returns a list of (chunk length, chunk value) pairs.
    """
    chunks = []
    for start in range(0, len(bits), chunk_length):
        piece = bits[start:start + chunk_length]
        value = 0
        for bit in piece:
            value = (value << 1) | int(bit)
        chunks.append((len(piece), value))
    return chunks


def chunks_to_bits(chunks):
    bits = []
    for length, value in chunks:
        bits.extend((value >> shift) & 1 for shift in range(length - 1, -1, -1))
    return bits


class SubblockCode:
    """Result of coding one subblock: bit count, the stream and whether it decoded exactly."""

    def __init__(self, length, ones, bits, stream_ok):
        self.length = length
        self.ones = ones
        self.bits = bits
        self.stream_ok = stream_ok


def code_subblock(bits, chunk_length=CHUNK_LENGTH):
    """Huffman-code a Boolean subblock and decode it back.

    The code is built from the subblock's empirical frequency of ones, so a
    receiver needs only that count to rebuild it. Returns a SubblockCode.
    """
    bits = [int(bit) for bit in bits]
    length = len(bits)
    if length == 0:
        return SubblockCode(0, 0, 0, True)
    ones = sum(bits)
    p_hat = ones / length

    chunks = bits_to_chunks(bits, chunk_length)
    streams = []
    decoded = []
    for piece_length, group in _group_by_length(chunks):
        coder = HuffmanCoder.for_bernoulli_chunks(p_hat, piece_length)
        stream = coder.encode(group)
        streams.append(stream)
        decoded.extend((piece_length, value) for value in coder.decode(stream, len(group)))

    total_bits = sum(len(stream) for stream in streams)
    return SubblockCode(length, ones, total_bits, chunks_to_bits(decoded) == bits)


def _group_by_length(chunks):
    groups = {}
    for piece_length, value in chunks:
        groups.setdefault(piece_length, []).append(value)
    return sorted(groups.items(), reverse=True)
