/* @ts-self-types="./fuzzy_rabi_web.d.ts" */

export class Densities {
    static __wrap(ptr) {
        const obj = Object.create(Densities.prototype);
        obj.__wbg_ptr = ptr;
        DensitiesFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        DensitiesFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_densities_free(ptr, 0);
    }
    /**
     * Bins per axis of both grids.
     * @returns {number}
     */
    get bins() {
        const ret = wasm.densities_bins(this.__wbg_ptr);
        return ret >>> 0;
    }
    /**
     * @returns {number}
     */
    get energyMax() {
        const ret = wasm.densities_energyMax(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get energyMin() {
        const ret = wasm.densities_energyMin(this.__wbg_ptr);
        return ret;
    }
    /**
     * `|c2|²` occupancy, row-major from the lowest bin.
     * @returns {Float64Array}
     */
    get excitation() {
        const ret = wasm.densities_excitation(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {Metrics}
     */
    get metrics() {
        const ret = wasm.densities_metrics(this.__wbg_ptr);
        return Metrics.__wrap(ret);
    }
    /**
     * Smoothed-readout occupancy, row-major from the lowest energy bin.
     * @returns {Float64Array}
     */
    get readout() {
        const ret = wasm.densities_readout(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
}
if (Symbol.dispose) Densities.prototype[Symbol.dispose] = Densities.prototype.free;

export class Metrics {
    static __wrap(ptr) {
        const obj = Object.create(Metrics.prototype);
        obj.__wbg_ptr = ptr;
        MetricsFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        MetricsFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_metrics_free(ptr, 0);
    }
    /**
     * @returns {number}
     */
    get deviationSe() {
        const ret = wasm.__wbg_get_metrics_deviationSe(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get deviation() {
        const ret = wasm.__wbg_get_metrics_deviation(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get effectiveSampleSize() {
        const ret = wasm.__wbg_get_metrics_effectiveSampleSize(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get reliabilitySe() {
        const ret = wasm.__wbg_get_metrics_reliabilitySe(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get reliability() {
        const ret = wasm.__wbg_get_metrics_reliability(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get softnessSe() {
        const ret = wasm.__wbg_get_metrics_softnessSe(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get softness() {
        const ret = wasm.__wbg_get_metrics_softness(this.__wbg_ptr);
        return ret;
    }
    /**
     * @param {number} arg0
     */
    set deviationSe(arg0) {
        wasm.__wbg_set_metrics_deviationSe(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set deviation(arg0) {
        wasm.__wbg_set_metrics_deviation(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set effectiveSampleSize(arg0) {
        wasm.__wbg_set_metrics_effectiveSampleSize(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set reliabilitySe(arg0) {
        wasm.__wbg_set_metrics_reliabilitySe(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set reliability(arg0) {
        wasm.__wbg_set_metrics_reliability(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set softnessSe(arg0) {
        wasm.__wbg_set_metrics_softnessSe(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set softness(arg0) {
        wasm.__wbg_set_metrics_softness(this.__wbg_ptr, arg0);
    }
}
if (Symbol.dispose) Metrics.prototype[Symbol.dispose] = Metrics.prototype.free;

export class Trajectory {
    static __wrap(ptr) {
        const obj = Object.create(Trajectory.prototype);
        obj.__wbg_ptr = ptr;
        TrajectoryFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        TrajectoryFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_trajectory_free(ptr, 0);
    }
    /**
     * @returns {Float64Array}
     */
    get excitation() {
        const ret = wasm.trajectory_excitation(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {number}
     */
    get finalExcitation() {
        const ret = wasm.trajectory_finalExcitation(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {Float64Array}
     */
    get readout() {
        const ret = wasm.trajectory_readout(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {Float64Array}
     */
    get smoothed() {
        const ret = wasm.trajectory_smoothed(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {Float64Array}
     */
    get times() {
        const ret = wasm.trajectory_times(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {number}
     */
    get weight() {
        const ret = wasm.trajectory_weight(this.__wbg_ptr);
        return ret;
    }
}
if (Symbol.dispose) Trajectory.prototype[Symbol.dispose] = Trajectory.prototype.free;

/**
 * Both density grids, `bins × bins`, over trajectories `0..samples`.
 * @param {string} kind
 * @param {number} parameter
 * @param {bigint} seed
 * @param {number} samples
 * @param {number} bins
 * @returns {Densities}
 */
export function densities(kind, parameter, seed, samples, bins) {
    const ptr0 = passStringToWasm0(kind, wasm.__wbindgen_malloc, wasm.__wbindgen_realloc);
    const len0 = WASM_VECTOR_LEN;
    const ret = wasm.densities(ptr0, len0, parameter, seed, samples, bins);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return Densities.__wrap(ret[0]);
}

/**
 * Softness, deviation and reliability over trajectories `0..samples`.
 * @param {string} kind
 * @param {number} parameter
 * @param {bigint} seed
 * @param {number} samples
 * @returns {Metrics}
 */
export function ensemble(kind, parameter, seed, samples) {
    const ptr0 = passStringToWasm0(kind, wasm.__wbindgen_malloc, wasm.__wbindgen_realloc);
    const len0 = WASM_VECTOR_LEN;
    const ret = wasm.ensemble(ptr0, len0, parameter, seed, samples);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return Metrics.__wrap(ret[0]);
}

/**
 * Readout curve `index` of `seed` and the atom's response to it.
 * @param {string} kind
 * @param {number} parameter
 * @param {bigint} seed
 * @param {bigint} index
 * @returns {Trajectory}
 */
export function trajectory(kind, parameter, seed, index) {
    const ptr0 = passStringToWasm0(kind, wasm.__wbindgen_malloc, wasm.__wbindgen_realloc);
    const len0 = WASM_VECTOR_LEN;
    const ret = wasm.trajectory(ptr0, len0, parameter, seed, index);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return Trajectory.__wrap(ret[0]);
}
function __wbg_get_imports() {
    const import0 = {
        __proto__: null,
        __wbg_Error_30c8987f7c2ed4e2: function(arg0, arg1) {
            const ret = Error(getStringFromWasm0(arg0, arg1));
            return ret;
        },
        __wbg___wbindgen_throw_41e9ee4f547fc59a: function(arg0, arg1) {
            throw new Error(getStringFromWasm0(arg0, arg1));
        },
        __wbindgen_init_externref_table: function() {
            const table = wasm.__wbindgen_externrefs;
            const offset = table.grow(4);
            table.set(0, undefined);
            table.set(offset + 0, undefined);
            table.set(offset + 1, null);
            table.set(offset + 2, true);
            table.set(offset + 3, false);
        },
    };
    return {
        __proto__: null,
        "./fuzzy_rabi_web_bg.js": import0,
    };
}

const DensitiesFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_densities_free(ptr, 1));
const MetricsFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_metrics_free(ptr, 1));
const TrajectoryFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_trajectory_free(ptr, 1));

function getArrayF64FromWasm0(ptr, len) {
    ptr = ptr >>> 0;
    return getFloat64ArrayMemory0().subarray(ptr / 8, ptr / 8 + len);
}

let cachedFloat64ArrayMemory0 = null;
function getFloat64ArrayMemory0() {
    if (cachedFloat64ArrayMemory0 === null || cachedFloat64ArrayMemory0.byteLength === 0) {
        cachedFloat64ArrayMemory0 = new Float64Array(wasm.memory.buffer);
    }
    return cachedFloat64ArrayMemory0;
}

function getStringFromWasm0(ptr, len) {
    return decodeText(ptr >>> 0, len);
}

let cachedUint8ArrayMemory0 = null;
function getUint8ArrayMemory0() {
    if (cachedUint8ArrayMemory0 === null || cachedUint8ArrayMemory0.byteLength === 0) {
        cachedUint8ArrayMemory0 = new Uint8Array(wasm.memory.buffer);
    }
    return cachedUint8ArrayMemory0;
}

function passStringToWasm0(arg, malloc, realloc) {
    if (realloc === undefined) {
        const buf = cachedTextEncoder.encode(arg);
        const ptr = malloc(buf.length, 1) >>> 0;
        getUint8ArrayMemory0().subarray(ptr, ptr + buf.length).set(buf);
        WASM_VECTOR_LEN = buf.length;
        return ptr;
    }

    let len = arg.length;
    let ptr = malloc(len, 1) >>> 0;

    const mem = getUint8ArrayMemory0();

    let offset = 0;

    for (; offset < len; offset++) {
        const code = arg.charCodeAt(offset);
        if (code > 0x7F) break;
        mem[ptr + offset] = code;
    }
    if (offset !== len) {
        if (offset !== 0) {
            arg = arg.slice(offset);
        }
        ptr = realloc(ptr, len, len = offset + arg.length * 3, 1) >>> 0;
        const view = getUint8ArrayMemory0().subarray(ptr + offset, ptr + len);
        const ret = cachedTextEncoder.encodeInto(arg, view);

        offset += ret.written;
        ptr = realloc(ptr, len, offset, 1) >>> 0;
    }

    WASM_VECTOR_LEN = offset;
    return ptr;
}

function takeFromExternrefTable0(idx) {
    const value = wasm.__wbindgen_externrefs.get(idx);
    wasm.__externref_table_dealloc(idx);
    return value;
}

let cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
cachedTextDecoder.decode();
const MAX_SAFARI_DECODE_BYTES = 2146435072;
let numBytesDecoded = 0;
function decodeText(ptr, len) {
    numBytesDecoded += len;
    if (numBytesDecoded >= MAX_SAFARI_DECODE_BYTES) {
        cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
        cachedTextDecoder.decode();
        numBytesDecoded = len;
    }
    return cachedTextDecoder.decode(getUint8ArrayMemory0().subarray(ptr, ptr + len));
}

const cachedTextEncoder = new TextEncoder();

if (!('encodeInto' in cachedTextEncoder)) {
    cachedTextEncoder.encodeInto = function (arg, view) {
        const buf = cachedTextEncoder.encode(arg);
        view.set(buf);
        return {
            read: arg.length,
            written: buf.length
        };
    };
}

let WASM_VECTOR_LEN = 0;

let wasmModule, wasmInstance, wasm;
function __wbg_finalize_init(instance, module) {
    wasmInstance = instance;
    wasm = instance.exports;
    wasmModule = module;
    cachedFloat64ArrayMemory0 = null;
    cachedUint8ArrayMemory0 = null;
    wasm.__wbindgen_start();
    return wasm;
}

async function __wbg_load(module, imports) {
    if (typeof Response === 'function' && module instanceof Response) {
        if (!module.ok) {
            throw new Error(`failed to fetch Wasm: ${module.status} ${module.statusText} fetching '${module.url}'`);
        }

        if (typeof WebAssembly.instantiateStreaming === 'function') {
            try {
                return await WebAssembly.instantiateStreaming(module, imports);
            } catch (e) {
                const validResponse = expectedResponseType(module.type);

                if (validResponse && module.headers.get('Content-Type') !== 'application/wasm') {
                    console.warn("`WebAssembly.instantiateStreaming` failed because your server does not serve Wasm with `application/wasm` MIME type. Falling back to `WebAssembly.instantiate` which is slower. Original error:\n", e);

                } else { throw e; }
            }
        }

        const bytes = await module.arrayBuffer();
        return await WebAssembly.instantiate(bytes, imports);
    } else {
        const instance = await WebAssembly.instantiate(module, imports);

        if (instance instanceof WebAssembly.Instance) {
            return { instance, module };
        } else {
            return instance;
        }
    }

    function expectedResponseType(type) {
        switch (type) {
            case 'basic': case 'cors': case 'default': return true;
        }
        return false;
    }
}

function initSync(module) {
    if (wasm !== undefined) return wasm;


    if (module !== undefined) {
        if (Object.getPrototypeOf(module) === Object.prototype) {
            ({module} = module)
        } else {
            console.warn('using deprecated parameters for `initSync()`; pass a single object instead')
        }
    }

    const imports = __wbg_get_imports();
    if (!(module instanceof WebAssembly.Module)) {
        module = new WebAssembly.Module(module);
    }
    const instance = new WebAssembly.Instance(module, imports);
    return __wbg_finalize_init(instance, module);
}

async function __wbg_init(module_or_path) {
    if (wasm !== undefined) return wasm;


    if (module_or_path !== undefined) {
        if (Object.getPrototypeOf(module_or_path) === Object.prototype) {
            ({module_or_path} = module_or_path)
        } else {
            console.warn('using deprecated parameters for the initialization function; pass a single object instead')
        }
    }

    if (module_or_path === undefined) {
        module_or_path = new URL('fuzzy_rabi_web_bg.wasm', import.meta.url);
    }
    const imports = __wbg_get_imports();

    if (typeof module_or_path === 'string' || (typeof Request === 'function' && module_or_path instanceof Request) || (typeof URL === 'function' && module_or_path instanceof URL)) {
        module_or_path = fetch(module_or_path);
    }

    const { instance, module } = await __wbg_load(await module_or_path, imports);

    return __wbg_finalize_init(instance, module);
}

export { initSync, __wbg_init as default };
