/**
 * Flat, C-style boundary around a constrained-decoding session: build a
 * handle, step it with the last sampled token to get the next legal-token
 * mask, release it when done. Handles are opaque integers so the same
 * surface can sit directly over a native library; the idiomatic wrapper in
 * index.ts builds on these three calls.
 *
 * Cursor semantics match the decoding engine exactly:
 *  - between answers (first call, or right after a separator): the mask is
 *    the trie root's continuations;
 *  - inside an answer: the current node's continuations, plus separator and
 *    end-of-sequence once the node completes a candidate;
 *  - after end-of-sequence: the session is finished; the final mask is all
 *    false and any further step throws.
 */

import { TokenTrie } from "./trie.js";

export type Phase = "between" | "in_answer" | "done";

export class SessionStateError extends Error {}
export class IllegalTokenError extends Error {
  constructor(public readonly token: number, detail: string) {
    super(`illegal token ${token}: ${detail}`);
  }
}

interface Session {
  trie: TokenTrie;
  vocabSize: number;
  sepId: number;
  eosId: number;
  phase: Phase;
  node: number;
  answersClosed: number;
  started: boolean;
}

const sessions = new Map<number, Session>();
let nextHandle = 1;

function validateSpecials(vocabSize: number, sepId: number, eosId: number): void {
  if (!Number.isInteger(vocabSize) || vocabSize < 2) {
    throw new RangeError(`vocabSize must be >= 2, got ${vocabSize}`);
  }
  for (const [name, id] of [["sepId", sepId], ["eosId", eosId]] as const) {
    if (!Number.isInteger(id) || id < 0 || id >= vocabSize) {
      throw new RangeError(`${name}=${id} outside [0, ${vocabSize})`);
    }
  }
  if (sepId === eosId) {
    throw new RangeError("sepId and eosId must be distinct");
  }
}

function register(trie: TokenTrie, vocabSize: number, sepId: number, eosId: number): number {
  validateSpecials(vocabSize, sepId, eosId);
  const handle = nextHandle++;
  sessions.set(handle, {
    trie,
    vocabSize,
    sepId,
    eosId,
    phase: "between",
    node: TokenTrie.ROOT,
    answersClosed: 0,
    started: false,
  });
  return handle;
}

/** Build a session from pre-encoded candidate token sequences. */
export function build(
  encodings: readonly (readonly number[])[],
  vocabSize: number,
  sepId: number,
  eosId: number,
): number {
  return register(TokenTrie.fromEncodings(encodings), vocabSize, sepId, eosId);
}

/** Build a session from a serialized trie blob. */
export function buildFromBinary(
  blob: Uint8Array,
  vocabSize: number,
  sepId: number,
  eosId: number,
): number {
  return register(TokenTrie.fromBinary(blob), vocabSize, sepId, eosId);
}

function getSession(handle: number): Session {
  const session = sessions.get(handle);
  if (session === undefined) {
    throw new SessionStateError(`handle ${handle} is not live`);
  }
  return session;
}

function legalMask(session: Session): Uint8Array {
  const mask = new Uint8Array(session.vocabSize);
  if (session.phase === "done") {
    return mask; // nothing is legal after end-of-sequence
  }
  const node = session.phase === "between" ? TokenTrie.ROOT : session.node;
  for (const token of session.trie.allowedNext(node)) {
    mask[token] = 1;
  }
  if (session.phase === "in_answer" && session.trie.isAccept(session.node)) {
    mask[session.sepId] = 1;
    mask[session.eosId] = 1;
  }
  return mask;
}

function advanceCursor(session: Session, token: number): void {
  if (session.phase === "done") {
    throw new SessionStateError("session is finished; no further tokens are legal");
  }
  if (token === session.eosId || token === session.sepId) {
    const atAccept = session.phase === "in_answer" && session.trie.isAccept(session.node);
    if (!atAccept) {
      throw new IllegalTokenError(token, "separator/end tokens are only legal at an accept state");
    }
    session.answersClosed += 1;
    if (token === session.eosId) {
      session.phase = "done";
    } else {
      session.phase = "between";
      session.node = TokenTrie.ROOT;
    }
    return;
  }
  const start = session.phase === "between" ? TokenTrie.ROOT : session.node;
  const next = session.trie.step(start, token);
  if (next === null) {
    throw new IllegalTokenError(token, "not a continuation of any candidate path");
  }
  session.node = next;
  session.phase = "in_answer";
}

/**
 * Advance the cursor by `lastToken` (null on the first call) and return the
 * dense legal mask for the next position, one 0/1 byte per vocabulary id.
 */
export function maskStep(handle: number, lastToken: number | null): Uint8Array {
  const session = getSession(handle);
  if (lastToken === null) {
    if (session.started) {
      throw new SessionStateError("null token is only valid on the first call");
    }
    session.started = true;
    return legalMask(session);
  }
  if (!session.started) {
    throw new SessionStateError("first call must pass null to read the initial mask");
  }
  advanceCursor(session, lastToken);
  return legalMask(session);
}

/** Number of answers closed so far (via separator or end-of-sequence). */
export function answersClosed(handle: number): number {
  return getSession(handle).answersClosed;
}

export function phase(handle: number): Phase {
  return getSession(handle).phase;
}

/** Drop the session; any later call on the handle throws. */
export function release(handle: number): void {
  if (!sessions.delete(handle)) {
    throw new SessionStateError(`handle ${handle} is not live`);
  }
}

/** Live session count, for leak checks in tests. */
export function liveSessions(): number {
  return sessions.size;
}
