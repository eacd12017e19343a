import { describe, expect, it } from "vitest";

import {
  ConstrainedSession,
  IllegalTokenError,
  SessionStateError,
  TokenTrie,
  build,
  liveSessions,
  maskStep,
  release,
} from "../src/index.js";

// Byte-level vocabulary used by the engine's CLI: 256 bytes + EOS + SEP.
const VOCAB = { size: 258, eosId: 256, sepId: 257 };

function encode(text: string): number[] {
  return [...Buffer.from(text, "utf-8")];
}

function onesOf(mask: Uint8Array): number[] {
  const ids: number[] = [];
  mask.forEach((bit, id) => {
    if (bit) ids.push(id);
  });
  return ids;
}

describe("TokenTrie", () => {
  it("builds from encodings and answers allowedNext", () => {
    const trie = TokenTrie.fromEncodings([encode("ab"), encode("ac"), encode("x")]);
    expect(new Set(trie.allowedNext(TokenTrie.ROOT))).toEqual(new Set([97, 120]));
    const a = trie.step(TokenTrie.ROOT, 97)!;
    expect(new Set(trie.allowedNext(a))).toEqual(new Set([98, 99]));
    expect(trie.isAccept(a)).toBe(false);
    expect(trie.isAccept(trie.step(a, 98)!)).toBe(true);
    expect(trie.candidateCount).toBe(3);
  });

  it("rejects empty candidate sets and empty encodings", () => {
    expect(() => TokenTrie.fromEncodings([])).toThrow();
    expect(() => TokenTrie.fromEncodings([[]])).toThrow();
  });

  it("rejects malformed binaries", () => {
    expect(() => TokenTrie.fromBinary(new Uint8Array([1, 2, 3]))).toThrow(/magic/);
  });
});

describe("maskStep boundary", () => {
  it("first mask is true exactly at candidate first tokens", () => {
    const handle = build([encode("Paris")], VOCAB.size, VOCAB.sepId, VOCAB.eosId);
    const mask = maskStep(handle, null);
    expect(mask.length).toBe(VOCAB.size);
    expect(onesOf(mask)).toEqual([encode("Paris")[0]]);
    release(handle);
  });

  it("offers continuation plus SEP and EOS at a nested accept state", () => {
    const encodings = [encode("Paris"), encode("Paris Saint-Germain")];
    const handle = build(encodings, VOCAB.size, VOCAB.sepId, VOCAB.eosId);
    let mask = maskStep(handle, null);
    for (const token of encode("Paris")) {
      mask = maskStep(handle, token);
    }
    const ids = new Set(onesOf(mask));
    expect(ids.has(VOCAB.sepId)).toBe(true);
    expect(ids.has(VOCAB.eosId)).toBe(true);
    expect(ids.has(encode(" ")[0])).toBe(true); // continuation toward the longer form
    release(handle);
  });

  it("separator resets to the root mask; EOS finishes the session", () => {
    const handle = build([encode("a"), encode("b")], VOCAB.size, VOCAB.sepId, VOCAB.eosId);
    const first = maskStep(handle, null);
    maskStep(handle, encode("a")[0]);
    const afterSep = maskStep(handle, VOCAB.sepId);
    expect(onesOf(afterSep)).toEqual(onesOf(first));
    maskStep(handle, encode("b")[0]);
    const afterEos = maskStep(handle, VOCAB.eosId);
    expect(onesOf(afterEos)).toEqual([]); // nothing is legal once finished
    expect(() => maskStep(handle, encode("a")[0])).toThrow(SessionStateError);
    release(handle);
  });

  it("throws on an illegal advance, naming the token", () => {
    const handle = build([encode("ab")], VOCAB.size, VOCAB.sepId, VOCAB.eosId);
    maskStep(handle, null);
    expect(() => maskStep(handle, 98)).toThrow(IllegalTokenError);
    expect(() => maskStep(handle, VOCAB.eosId)).toThrow(/only legal at an accept state/);
    release(handle);
  });

  it("fails cleanly after release", () => {
    const handle = build([encode("x")], VOCAB.size, VOCAB.sepId, VOCAB.eosId);
    release(handle);
    expect(() => maskStep(handle, null)).toThrow(SessionStateError);
    expect(() => release(handle)).toThrow(SessionStateError);
  });

  it("validates special token ids", () => {
    expect(() => build([encode("x")], 258, 7, 7)).toThrow(/distinct/);
    expect(() => build([encode("x")], 10, 3, 999)).toThrow(RangeError);
  });
});

describe("ConstrainedSession wrapper", () => {
  it("walks a two-answer generation and counts closed answers", () => {
    const session = ConstrainedSession.fromEncodings(
      [encode("ab"), encode("cd")],
      VOCAB,
    );
    session.start();
    for (const token of encode("ab")) session.push(token);
    session.push(VOCAB.sepId);
    expect(session.answersClosed).toBe(1);
    for (const token of encode("cd")) session.push(token);
    session.push(VOCAB.eosId);
    expect(session.done).toBe(true);
    expect(session.answersClosed).toBe(2);
    session.close();
    expect(() => session.start()).toThrow(SessionStateError);
  });

  it("does not leak sessions", () => {
    const before = liveSessions();
    const session = ConstrainedSession.fromEncodings([encode("x")], VOCAB);
    expect(liveSessions()).toBe(before + 1);
    session.close();
    expect(liveSessions()).toBe(before);
  });
});
