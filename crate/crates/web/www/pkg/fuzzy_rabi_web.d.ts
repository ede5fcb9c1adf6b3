/* tslint:disable */
/* eslint-disable */

export class Densities {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    /**
     * Bins per axis of both grids.
     */
    readonly bins: number;
    readonly energyMax: number;
    readonly energyMin: number;
    /**
     * `|c2|²` occupancy, row-major from the lowest bin.
     */
    readonly excitation: Float64Array;
    readonly metrics: Metrics;
    /**
     * Smoothed-readout occupancy, row-major from the lowest energy bin.
     */
    readonly readout: Float64Array;
}

export class Metrics {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    deviationSe: number;
    deviation: number;
    effectiveSampleSize: number;
    reliabilitySe: number;
    reliability: number;
    softnessSe: number;
    softness: number;
}

export class Trajectory {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly excitation: Float64Array;
    readonly finalExcitation: number;
    readonly readout: Float64Array;
    readonly smoothed: Float64Array;
    readonly times: Float64Array;
    readonly weight: number;
}

/**
 * Both density grids, `bins × bins`, over trajectories `0..samples`.
 */
export function densities(kind: string, parameter: number, seed: bigint, samples: number, bins: number): Densities;

/**
 * Softness, deviation and reliability over trajectories `0..samples`.
 */
export function ensemble(kind: string, parameter: number, seed: bigint, samples: number): Metrics;

/**
 * Readout curve `index` of `seed` and the atom's response to it.
 */
export function trajectory(kind: string, parameter: number, seed: bigint, index: bigint): Trajectory;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_densities_free: (a: number, b: number) => void;
    readonly __wbg_get_metrics_deviation: (a: number) => number;
    readonly __wbg_get_metrics_deviationSe: (a: number) => number;
    readonly __wbg_get_metrics_effectiveSampleSize: (a: number) => number;
    readonly __wbg_get_metrics_reliability: (a: number) => number;
    readonly __wbg_get_metrics_reliabilitySe: (a: number) => number;
    readonly __wbg_get_metrics_softness: (a: number) => number;
    readonly __wbg_get_metrics_softnessSe: (a: number) => number;
    readonly __wbg_metrics_free: (a: number, b: number) => void;
    readonly __wbg_set_metrics_deviation: (a: number, b: number) => void;
    readonly __wbg_set_metrics_deviationSe: (a: number, b: number) => void;
    readonly __wbg_set_metrics_effectiveSampleSize: (a: number, b: number) => void;
    readonly __wbg_set_metrics_reliability: (a: number, b: number) => void;
    readonly __wbg_set_metrics_reliabilitySe: (a: number, b: number) => void;
    readonly __wbg_set_metrics_softness: (a: number, b: number) => void;
    readonly __wbg_set_metrics_softnessSe: (a: number, b: number) => void;
    readonly __wbg_trajectory_free: (a: number, b: number) => void;
    readonly densities: (a: number, b: number, c: number, d: bigint, e: number, f: number) => [number, number, number];
    readonly densities_bins: (a: number) => number;
    readonly densities_energyMax: (a: number) => number;
    readonly densities_energyMin: (a: number) => number;
    readonly densities_excitation: (a: number) => [number, number];
    readonly densities_metrics: (a: number) => number;
    readonly densities_readout: (a: number) => [number, number];
    readonly ensemble: (a: number, b: number, c: number, d: bigint, e: number) => [number, number, number];
    readonly trajectory: (a: number, b: number, c: number, d: bigint, e: bigint) => [number, number, number];
    readonly trajectory_excitation: (a: number) => [number, number];
    readonly trajectory_finalExcitation: (a: number) => number;
    readonly trajectory_readout: (a: number) => [number, number];
    readonly trajectory_smoothed: (a: number) => [number, number];
    readonly trajectory_times: (a: number) => [number, number];
    readonly trajectory_weight: (a: number) => number;
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
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
