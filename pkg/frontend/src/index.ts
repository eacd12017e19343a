/**
 * Idiomatic wrapper over the flat build/maskStep/release boundary, shaped
 * for use as a logits processor inside a JS generation loop:
 *
 *   const session = ConstrainedSession.fromEncodings(encodings, vocab);
 *   let mask = session.start();
 *   while (!session.done) {
 *     const token = sample(maskLogits(logits, mask));
 *     mask = session.push(token);
 *   }
 *   session.close();
 */

import * as engine from "./engine.js";

export { TokenTrie } from "./trie.js";
export {
  build,
  buildFromBinary,
  maskStep,
  release,
  answersClosed,
  phase,
  liveSessions,
  IllegalTokenError,
  SessionStateError,
} from "./engine.js";
export type { Phase } from "./engine.js";

export interface VocabularySpec {
  size: number;
  sepId: number;
  eosId: number;
}

export class ConstrainedSession {
  private handle: number | null;
  private startedMask: Uint8Array | null = null;

  private constructor(handle: number, public readonly vocab: VocabularySpec) {
    this.handle = handle;
  }

  static fromEncodings(
    encodings: readonly (readonly number[])[],
    vocab: VocabularySpec,
  ): ConstrainedSession {
    return new ConstrainedSession(
      engine.build(encodings, vocab.size, vocab.sepId, vocab.eosId),
      vocab,
    );
  }

  static fromBinary(blob: Uint8Array, vocab: VocabularySpec): ConstrainedSession {
    return new ConstrainedSession(
      engine.buildFromBinary(blob, vocab.size, vocab.sepId, vocab.eosId),
      vocab,
    );
  }

  private live(): number {
    if (this.handle === null) {
      throw new engine.SessionStateError("session already closed");
    }
    return this.handle;
  }

  /** Initial legal mask, before any token is sampled. */
  start(): Uint8Array {
    this.startedMask = engine.maskStep(this.live(), null);
    return this.startedMask;
  }

  /** Record a sampled token and return the next legal mask. */
  push(token: number): Uint8Array {
    if (this.startedMask === null) {
      throw new engine.SessionStateError("call start() before push()");
    }
    return engine.maskStep(this.live(), token);
  }

  get done(): boolean {
    return engine.phase(this.live()) === "done";
  }

  get answersClosed(): number {
    return engine.answersClosed(this.live());
  }

  close(): void {
    engine.release(this.live());
    this.handle = null;
  }
}
