/**
 * Token-id prefix trie over candidate encodings.
 *
 * Mirrors the engine's arena layout: node 0 is the root, each node holds a
 * token -> child map plus an accept flag marking the end of one candidate's
 * canonical encoding. Tries are built either from pre-encoded token
 * sequences supplied by the host tokenizer, or by parsing the engine's
 * serialized form (magic "RCDT", little-endian).
 */

const MAGIC = 0x54444352; // "RCDT" read as LE u32
const FORMAT_VERSION = 1;

export class TokenTrie {
  static readonly ROOT = 0;

  private constructor(
    private readonly children: Array<Map<number, number>>,
    private readonly accept: boolean[],
  ) {}

  get nodeCount(): number {
    return this.children.length;
  }

  /** Number of accept nodes == number of distinct candidate encodings. */
  get candidateCount(): number {
    return this.accept.reduce((n, flag) => n + (flag ? 1 : 0), 0);
  }

  private check(node: number): void {
    if (!Number.isInteger(node) || node < 0 || node >= this.children.length) {
      throw new RangeError(`invalid node id: ${node}`);
    }
  }

  allowedNext(node: number): number[] {
    this.check(node);
    return [...this.children[node].keys()];
  }

  /** Child reached by `token`, or null when the move leaves every path. */
  step(node: number, token: number): number | null {
    this.check(node);
    return this.children[node].get(token) ?? null;
  }

  isAccept(node: number): boolean {
    this.check(node);
    return this.accept[node];
  }

  /** Build from canonical token sequences (tokenization stays host-side). */
  static fromEncodings(encodings: readonly (readonly number[])[]): TokenTrie {
    if (encodings.length === 0) {
      throw new Error("candidate set must be non-empty");
    }
    const children: Array<Map<number, number>> = [new Map()];
    const accept: boolean[] = [false];
    for (const encoding of encodings) {
      if (encoding.length === 0) {
        throw new Error("candidate encodes to the empty sequence");
      }
      let node = 0;
      for (const token of encoding) {
        let next = children[node].get(token);
        if (next === undefined) {
          next = children.length;
          children[node].set(token, next);
          children.push(new Map());
          accept.push(false);
        }
        node = next;
      }
      accept[node] = true;
    }
    return new TokenTrie(children, accept);
  }

  /** Parse the serialized trie format (bit-exact with the engine's writer). */
  static fromBinary(blob: Uint8Array): TokenTrie {
    const view = new DataView(blob.buffer, blob.byteOffset, blob.byteLength);
    if (blob.byteLength < 12 || view.getUint32(0, true) !== MAGIC) {
      throw new Error("not a serialized token trie (bad magic)");
    }
    const version = view.getUint32(4, true);
    if (version !== FORMAT_VERSION) {
      throw new Error(`unsupported trie format version: ${version}`);
    }
    const nodeCount = view.getUint32(8, true);
    let offset = 12;
    const children: Array<Map<number, number>> = [];
    const accept: boolean[] = [];
    for (let i = 0; i < nodeCount; i++) {
      const childCount = view.getUint32(offset, true);
      offset += 4;
      const node = new Map<number, number>();
      for (let c = 0; c < childCount; c++) {
        const token = view.getUint32(offset, true);
        const child = view.getUint32(offset + 4, true);
        offset += 8;
        if (child >= nodeCount) {
          throw new Error(`child id ${child} out of range`);
        }
        node.set(token, child);
      }
      accept.push(view.getUint8(offset) !== 0);
      offset += 1;
      children.push(node);
    }
    if (offset !== blob.byteLength) {
      throw new Error("trailing bytes after trie payload");
    }
    if (children.length === 0) {
      throw new Error("empty trie");
    }
    return new TokenTrie(children, accept);
  }
}
