use std::ffi::{CStr, CString};
use std::ptr;

use graph_discord_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(gd_last_error()) }.to_string_lossy().into_owned()
}

struct Pair(*mut GdGraph, *mut GdLabeling);

impl Drop for Pair {
    fn drop(&mut self) {
        unsafe {
            gd_graph_free(self.0);
            gd_labeling_free(self.1);
        }
    }
}

fn generate(family: &str, params: &str) -> Pair {
    let (f, p) = (CString::new(family).unwrap(), CString::new(params).unwrap());
    let (mut g, mut l) = (ptr::null_mut(), ptr::null_mut());
    let status = unsafe { gd_generate(f.as_ptr(), p.as_ptr(), &mut g, &mut l) };
    assert_eq!(status, GdStatus::Ok, "{}", last_error());
    Pair(g, l)
}

fn qd_of(p: &Pair, sign: i32) -> GdQd {
    let mut out = GdQd::default();
    assert_eq!(unsafe { gd_qd(p.0, p.1, sign, &mut out) }, GdStatus::Ok, "{}", last_error());
    out
}

#[test]
fn final_example_through_handles() {
    let edges: [u32; 6] = [1, 3, 1, 4, 2, 3];
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { gd_graph_new(4, edges.as_ptr(), 3, ptr::null(), 0, &mut g) }, GdStatus::Ok);
    let mut l = ptr::null_mut();
    assert_eq!(unsafe { gd_labeling_new(2, 2, ptr::null(), 0, &mut l) }, GdStatus::Ok);
    let p = Pair(g, l);
    assert_eq!(unsafe { gd_graph_vertex_count(p.0) }, 4);
    assert_eq!(unsafe { gd_graph_edge_count(p.0) }, 3);
    let q = qd_of(&p, -1);
    assert_eq!((q.prop2, q.prop3, q.prop4, q.prop5, q.qd), (0, 0, 8, 0, 8));
    assert!(!q.zero_discord);
    let mut d = 0.0;
    assert_eq!(unsafe { gd_fixed_basis_discord(p.0, p.1, -1, &mut d) }, GdStatus::Ok);
    assert!(d > 1e-3);
}

#[test]
fn generated_families() {
    assert!(qd_of(&generate("complete_bipartite", "n=3"), 1).zero_discord);
    assert_eq!(qd_of(&generate("figure3_H", ""), -1).qd, 80);
    assert!(qd_of(&generate("werner", "d=3"), 1).prop2 > 0);
}

#[test]
fn json_report() {
    let p = generate("final_example", "");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { gd_report_json(p.0, p.1, -1, &mut s) }, GdStatus::Ok);
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { gd_string_free(s) };
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["qd"], 8);
    assert_eq!(v["s"], -1);
}

#[test]
fn edge_list_and_graph6() {
    let text = CString::new("6 2 3\n1 4\n1 5\n1 6\n2 4\n2 5\n2 6\n3 4\n3 5\n3 6\nperm: 1 4 5 2 3 6\n").unwrap();
    let (mut g, mut l) = (ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { gd_graph_from_edge_list(text.as_ptr(), &mut g, &mut l) }, GdStatus::Ok);
    let p = Pair(g, l);
    assert_eq!(qd_of(&p, 1).qd, 80);

    let line = CString::new("C~").unwrap();
    let mut k4 = ptr::null_mut();
    assert_eq!(unsafe { gd_graph_from_graph6(line.as_ptr(), &mut k4) }, GdStatus::Ok);
    assert_eq!(unsafe { gd_graph_edge_count(k4) }, 6);
    unsafe { gd_graph_free(k4) };
}

#[test]
fn matrix_measures() {
    let werner_block: [u8; 4] = [0, 0, 1, 0];
    let mut out = 0;
    assert_eq!(unsafe { gd_nn(werner_block.as_ptr(), 2, &mut out) }, GdStatus::Ok);
    assert_eq!(out, 2);
    let a: [u8; 9] = [0, 1, 0, 1, 0, 1, 0, 1, 0];
    let b: [u8; 9] = [0, 0, 1, 0, 0, 0, 1, 0, 0];
    assert_eq!(unsafe { gd_nc1(a.as_ptr(), b.as_ptr(), 3, &mut out) }, GdStatus::Ok);
    assert_eq!(out, 4);
    let bad: [u8; 1] = [2];
    assert_eq!(unsafe { gd_nn(bad.as_ptr(), 1, &mut out) }, GdStatus::Parse);
}

#[test]
fn error_codes() {
    let mut g = ptr::null_mut();
    let edges: [u32; 2] = [1, 9];
    assert_eq!(unsafe { gd_graph_new(4, edges.as_ptr(), 1, ptr::null(), 0, &mut g) }, GdStatus::Parse);
    assert!(last_error().contains("out of range"));
    assert_eq!(unsafe { gd_graph_new(4, ptr::null(), 1, ptr::null(), 0, &mut g) }, GdStatus::NullPointer);

    let mut l = ptr::null_mut();
    let perm: [u32; 3] = [1, 2, 3];
    assert_eq!(unsafe { gd_labeling_new(2, 2, perm.as_ptr(), 3, &mut l) }, GdStatus::Dimension);

    let mut empty = ptr::null_mut();
    assert_eq!(unsafe { gd_graph_new(4, ptr::null(), 0, ptr::null(), 0, &mut empty) }, GdStatus::Ok);
    assert_eq!(unsafe { gd_labeling_new(2, 2, ptr::null(), 0, &mut l) }, GdStatus::Ok);
    let p = Pair(empty, l);
    let mut q = GdQd::default();
    assert_eq!(unsafe { gd_qd(p.0, p.1, -1, &mut q) }, GdStatus::EmptyGraph);
    assert_eq!(unsafe { gd_qd(p.0, p.1, 0, &mut q) }, GdStatus::InvalidArgument);
    assert_eq!(unsafe { gd_qd(ptr::null(), p.1, 1, &mut q) }, GdStatus::NullPointer);

    let bad = CString::new("nope").unwrap();
    let (mut g2, mut l2) = (ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { gd_generate(bad.as_ptr(), ptr::null(), &mut g2, &mut l2) }, GdStatus::InvalidArgument);
    let msg = unsafe { CStr::from_ptr(gd_status_message(GdStatus::Dimension)) };
    assert_eq!(msg.to_str().unwrap(), "dimension mismatch");
    unsafe {
        gd_graph_free(ptr::null_mut());
        gd_string_free(ptr::null_mut());
    }
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/graph_discord.h");
    let text = std::fs::read_to_string(header).unwrap();
    for name in ["gd_qd", "gd_generate", "gd_nc1", "GD_STATUS_EMPTY_GRAPH", "typedef struct GdGraph GdGraph"] {
        assert!(text.contains(name), "header lacks {name}");
    }
    match std::process::Command::new("cc").args(["-fsyntax-only", "-x", "c", header]).status() {
        Ok(status) => assert!(status.success(), "header does not compile"),
        Err(_) => eprintln!("no C compiler found; syntax check skipped"),
    }
}
