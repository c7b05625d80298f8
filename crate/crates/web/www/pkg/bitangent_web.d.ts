/* tslint:disable */
/* eslint-disable */

/**
 * Tangency type of the line `"a0,a1,a2,a3; b0,b1,b2,b3"` on the surface.
 */
export function classify(quartic: string, line_text: string): string;

/**
 * The member of the example family at `(s0 : s1)`: the line through
 * `(s1^3, 0, s0^3, 0)` and `(0, s0, 0, s1)`, classified on the example surface.
 */
export function family_member(s0: number, s1: number): string;

/**
 * Symbolic check of the example family under both readings.
 */
export function family_report(): string;

/**
 * Tangent section at `point`, bitangents through it, and quadratic points
 * on the pencil lines `(t : 1)` for `t` in `lo..=hi`.
 */
export function quadratic_points(quartic: string, point_text: string, lo: number, hi: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly classify: (a: number, b: number, c: number, d: number) => [number, number];
    readonly family_member: (a: number, b: number) => [number, number];
    readonly family_report: () => [number, number];
    readonly quadratic_points: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
